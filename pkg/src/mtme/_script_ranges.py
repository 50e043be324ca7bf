"""Unicode script property ranges (generated file).

Source: `regex` 2026.7.10 property tables (Unicode 17.0.0).
Regenerate with tools/gen_script_ranges.py; generated 2026-08-10.
"""

UNICODE_VERSION = "17.0.0"

SCRIPT_NAMES = (
    'Adlam',
    'Ahom',
    'Anatolian_Hieroglyphs',
    'Arabic',
    'Armenian',
    'Avestan',
    'Balinese',
    'Bamum',
    'Bassa_Vah',
    'Batak',
    'Bengali',
    'Beria_Erfe',
    'Bhaiksuki',
    'Bopomofo',
    'Brahmi',
    'Braille',
    'Buginese',
    'Buhid',
    'Canadian_Aboriginal',
    'Carian',
    'Caucasian_Albanian',
    'Chakma',
    'Cham',
    'Cherokee',
    'Chorasmian',
    'Common',
    'Coptic',
    'Cuneiform',
    'Cypriot',
    'Cypro_Minoan',
    'Cyrillic',
    'Deseret',
    'Devanagari',
    'Dives_Akuru',
    'Dogra',
    'Duployan',
    'Egyptian_Hieroglyphs',
    'Elbasan',
    'Elymaic',
    'Ethiopic',
    'Garay',
    'Georgian',
    'Glagolitic',
    'Gothic',
    'Grantha',
    'Greek',
    'Gujarati',
    'Gunjala_Gondi',
    'Gurmukhi',
    'Gurung_Khema',
    'Han',
    'Hangul',
    'Hanifi_Rohingya',
    'Hanunoo',
    'Hatran',
    'Hebrew',
    'Hiragana',
    'Imperial_Aramaic',
    'Inherited',
    'Inscriptional_Pahlavi',
    'Inscriptional_Parthian',
    'Javanese',
    'Kaithi',
    'Kannada',
    'Katakana',
    'Kawi',
    'Kayah_Li',
    'Kharoshthi',
    'Khitan_Small_Script',
    'Khmer',
    'Khojki',
    'Khudawadi',
    'Kirat_Rai',
    'Lao',
    'Latin',
    'Lepcha',
    'Limbu',
    'Linear_A',
    'Linear_B',
    'Lisu',
    'Lycian',
    'Lydian',
    'Mahajani',
    'Makasar',
    'Malayalam',
    'Mandaic',
    'Manichaean',
    'Marchen',
    'Masaram_Gondi',
    'Medefaidrin',
    'Meetei_Mayek',
    'Mende_Kikakui',
    'Meroitic_Cursive',
    'Meroitic_Hieroglyphs',
    'Miao',
    'Modi',
    'Mongolian',
    'Mro',
    'Multani',
    'Myanmar',
    'Nabataean',
    'Nag_Mundari',
    'Nandinagari',
    'New_Tai_Lue',
    'Newa',
    'Nko',
    'Nushu',
    'Nyiakeng_Puachue_Hmong',
    'Ogham',
    'Ol_Chiki',
    'Ol_Onal',
    'Old_Hungarian',
    'Old_Italic',
    'Old_North_Arabian',
    'Old_Permic',
    'Old_Persian',
    'Old_Sogdian',
    'Old_South_Arabian',
    'Old_Turkic',
    'Old_Uyghur',
    'Oriya',
    'Osage',
    'Osmanya',
    'Pahawh_Hmong',
    'Palmyrene',
    'Pau_Cin_Hau',
    'Phags_Pa',
    'Phoenician',
    'Psalter_Pahlavi',
    'Rejang',
    'Runic',
    'Samaritan',
    'Saurashtra',
    'Sharada',
    'Shavian',
    'Siddham',
    'Sidetic',
    'SignWriting',
    'Sinhala',
    'Sogdian',
    'Sora_Sompeng',
    'Soyombo',
    'Sundanese',
    'Sunuwar',
    'Syloti_Nagri',
    'Syriac',
    'Tagalog',
    'Tagbanwa',
    'Tai_Le',
    'Tai_Tham',
    'Tai_Viet',
    'Tai_Yo',
    'Takri',
    'Tamil',
    'Tangsa',
    'Tangut',
    'Telugu',
    'Thaana',
    'Thai',
    'Tibetan',
    'Tifinagh',
    'Tirhuta',
    'Todhri',
    'Tolong_Siki',
    'Toto',
    'Tulu_Tigalari',
    'Ugaritic',
    'Vai',
    'Vithkuqi',
    'Wancho',
    'Warang_Citi',
    'Yezidi',
    'Yi',
    'Zanabazar_Square',
)

# Sorted, disjoint ranges packed as start:end:name_index hex triples.
PACKED_RANGES = (
    "0:40:19;41:5a:4a;5b:60:19;61:7a:4a;7b:a9:19;aa:aa:4a;ab:b9:19;ba:ba:4a;bb:bf:19;c0:d6:4a;d7:d7:19;d8:f6:4a;f7:f7:19;f8:2b8:4a;2b9:2df:19;2e0:2e4:4a;2e5:2e9:19;2ea:2eb:d;2ec:2ff:19;300:36f:3a;370:373:2d;374:374:19;375:377:2d;37a:37d:2d;37e:37e:19;37f:37f:2d;384:384:2d;385:385:19;386:386:2d;387:387:19;388:38a:2d;38c:38c:2d;38e:3a1:2d;3a3:3e1:2d;3e2:3ef:1a;3f0:3ff:2d;400:484:1e;485:486:3a;487:52f:1e;531:556:4;559:58a:4;58d:58f:4;591:5c7:37;5d0:5ea:37;5ef:5f4:37;600:604:3;605:605:19;606:60b:3;60c:60c:19;60d:61a:3;61b:61b:19;61c:61e:3;61f:61f:19;620:63f:3;640:640:19;641:64a:3;64b:655:3a;656:66f:3;670:670:3a;671:6dc:3;6dd:6dd:19;6de:6ff:3;700:70d:91;70f:74a:91;74d:74f:91;750:77f:3;780:7b1:9d;7c0:7fa:69;7fd:7ff:69;800:82d:83;830:83e:83;840:85b:55;85e:85e:55;860:86a:91;870:891:3;897:8e1:3;8e2:8e2:19;8e3:8ff:3;900:950:20;951:954:3a;955:963:20;964:965:19;966:97f:20;980:983:a;985:98c:a;98f:990:a;993:9a8:a;9aa:9b0:a;9b2:9b2:a;9b6:9b9:a;9bc:9c4:a;9c7:9c8:a;9cb:9ce:a;9d7:9d7:a;9dc:9dd:a;9df:9e3:a;9e6:9fe:a;a01:a03:30;a05:a0a:30;a0f:a10:30;a13:a28:30;a2a:a30:30;a32:a33:30;a35:a36:30;a38:a39:30;a3c:a3c:30;a3e:a42:30;a47:a48:30;a4b:a4d:30;a51:a51:30;a59:a5c:30;a5e:a5e:30;a66:a76:30;a81:a83:2e;a85:a8d:2e;a8f:a91:2e;a93:aa8:2e;aaa:ab0:2e;ab2:ab3:2e;ab5:ab9:2e;abc:ac5:2e;ac7:ac9:2e;acb:acd:2e;ad0:ad0:2e;ae0:ae3:2e;ae6:af1:2e;af9:aff:2e;b01:b03:78;b05:b0c:78;b0f:b10:78;b13:b28:78;b2a:b30:78;b32:b33:78;b35:b39:78;b3c:b44:78;b47:b48:78;b4b:b4d:78;b55:b57:78;b5c:b5d:78;b5f:b63:78;b66:b77:78;b82:b83:99;b85:b8a:99;b8e:b90:99;b92:b95:99;b99:b9a:99;b9c:b9c:99;b9e:b9f:99;ba3:ba4:99;ba8:baa:99;bae:bb9:99;bbe:bc2:99;bc6:bc8:99;bca:bcd:99;bd0:bd0:99;bd7:bd7:99;be6:bfa:99;c00:c0c:9c;c0e:c10:9c;c12:c28:9c;c2a:c39:9c;c3c:c44:9c;c46:c48:9c;c4a:c4d:9c;c55:c56:9c;c58:c5a:9c;c5c:c5d:9c;c60:c63:9c;c66:c6f:9c;c77:c7f:9c;c80:c8c:3f;c8e:c90:3f;c92:ca8:3f;caa:cb3:3f;cb5:cb9:3f;cbc:cc4:3f;cc6:cc8:3f;cca:ccd:3f;cd5:cd6:3f;cdc:cde:3f;ce0:ce3:3f;ce6:cef:3f;cf1:cf3:3f;d00:d0c:54;d0e:d10:54;d12:d44:54;d46:d48:54;d4a:d4f:54;d54:d63:54;d66:d7f:54;d81:d83:8a;d85:d96:8a;d9a:db1:8a;db3:dbb:8a;dbd:dbd:8a;dc0:dc6:8a;dca:dca:8a;dcf:dd4:8a;dd6:dd6:8a;dd8:ddf:8a;de6:def:8a;df2:df4:8a;e01:e3a:9e;e3f:e3f:19;e40:e5b:9e;e81:e82:49;e84:e84:49;e86:e8a:49;e8c:ea3:49;ea5:ea5:49;ea7:ebd:49;ec0:ec4:49;ec6:ec6:49;ec8:ece:49;ed0:ed9:49;edc:edf:49;f00:f47:9f;f49:f6c:9f;f71:f97:9f;f99:fbc:9f;fbe:fcc:9f;fce:fd4:9f;fd5:fd8:19;fd9:fda:9f;1000:109f:63;10a0:10c5:29;10c7:10c7:29;10cd:10cd:29;10d0:10fa:29;10fb:10fb:19;10fc:10ff:29;1100:11ff:33;1200:1248:27;124a:124d:27;1250:1256:27;1258:1258:27;125a:125d:27;1260:1288:27;128a:128d:27;1290:12b0:27;12b2:12b5:27;12b8:12be:27;12c0:12c0:27;12c2:12c5:27;12c8:12d6:27;12d8:1310:27;1312:1315:27;1318:135a:27;135d:137c:27;1380:1399:27;13a0:13f5:17;13f8:13fd:17;1400:167f:12;1680:169c:6c;16a0:16ea:82;16eb:16ed:19;16ee:16f8:82;1700:1715:92;171f:171f:92;1720:1734:35;1735:1736:19;1740:1753:11;1760:176c:93;176e:1770:93;1772:1773:93;1780:17dd:45;17e0:17e9:45;17f0:17f9:45;1800:1801:60;1802:1803:19;1804:1804:60;1805:1805:19;1806:1819:60;1820:1878:60;1880:18aa:60;18b0:18f5:12;1900:191e:4c;1920:192b:4c;1930:193b:4c;1940:1940:4c;1944:194f:4c;1950:196d:94;1970:1974:94;1980:19ab:67;19b0:19c9:67;19d0:19da:67;19de:19df:67;19e0:19ff:45;1a00:1a1b:10;1a1e:1a1f:10;1a20:1a5e:95;1a60:1a7c:95;1a7f:1a89:95;1a90:1a99:95;1aa0:1aad:95;1ab0:1add:3a;1ae0:1aeb:3a;1b00:1b4c:6;1b4e:1b7f:6;1b80:1bbf:8e;1bc0:1bf3:9;1bfc:1bff:9;1c00:1c37:4b;1c3b:1c49:4b;1c4d:1c4f:4b;1c50:1c7f:6d;1c80:1c8a:1e;1c90:1cba:29;1cbd:1cbf:29;1cc0:1cc7:8e;1cd0:1cd2:3a;1cd3:1cd3:19;1cd4:1ce0:3a;1ce1:1ce1:19;1ce2:1ce8:3a;1ce9:1cec:19;1ced:1ced:3a;1cee:1cf3:19;1cf4:1cf4:3a;1cf5:1cf7:19;1cf8:1cf9:3a;1cfa:1cfa:19;1d00:1d25:4a;1d26:1d2a:2d;1d2b:1d2b:1e;1d2c:1d5c:4a;1d5d:1d61:2d;1d62:1d65:4a;1d66:1d6a:2d;1d6b:1d77:4a;1d78:1d78:1e;1d79:1dbe:4a;1dbf:1dbf:2d;1dc0:1dff:3a;1e00:1eff:4a;1f00:1f15:2d;1f18:1f1d:2d;1f20:1f45:2d;1f48:1f4d:2d;1f50:1f57:2d;1f59:1f59:2d;1f5b:1f5b:2d;1f5d:1f5d:2d;1f5f:1f7d:2d;1f80:1fb4:2d;1fb6:1fc4:2d;1fc6:1fd3:2d;1fd6:1fdb:2d;1fdd:1fef:2d;1ff2:1ff4:2d;1ff6:1ffe:2d;2000:200b:19;200c:200d:3a;200e:2064:19;2066:2070:19;2071:2071:4a;2074:207e:19;207f:207f:4a;2080:208e:19;2090:209c:4a;20a0:20c1:19;20d0:20f0:3a;2100:2125:19;2126:2126:2d;2127:2129:19;212a:212b:4a;212c:2131:19;2132:2132:4a;2133:214d:19;214e:214e:4a;214f:215f:19;2160:2188:4a;2189:218b:19;2190:2429:19;2440:244a:19;2460:27ff:19;2800:28ff:f;2900:2b73:19;2b76:2bff:19;2c00:2c5f:2a;2c60:2c7f:4a;2c80:2cf3:1a;2cf9:2cff:1a;2d00:2d25:29;2d27:2d27:29;2d2d:2d2d:29;2d30:2d67:a0;2d6f:2d70:a0;2d7f:2d7f:a0;2d80:2d96:27;2da0:2da6:27;2da8:2dae:27;2db0:2db6:27;2db8:2dbe:27;2dc0:2dc6:27;2dc8:2dce:27;2dd0:2dd6:27;2dd8:2dde:27;2de0:2dff:1e;2e00:2e5d:19;2e80:2e99:32;2e9b:2ef3:32;2f00:2fd5:32;2ff0:3004:19;3005:3005:32;3006:3006:19;3007:3007:32;3008:3020:19;3021:3029:32;302a:302d:3a;302e:302f:33;3030:3037:19;3038:303b:32;303c:303f:19;3041:3096:38;3099:309a:3a;309b:309c:19;309d:309f:38;30a0:30a0:19;30a1:30fa:40;30fb:30fc:19;30fd:30ff:40;3105:312f:d;3131:318e:33;3190:319f:19;31a0:31bf:d;31c0:31e5:19;31ef:31ef:19;31f0:31ff:40;3200:321e:33;3220:325f:19;3260:327e:33;327f:32cf:19;32d0:32fe:40;32ff:32ff:19;3300:3357:40;3358:33ff:19;3400:4dbf:32;4dc0:4dff:19;4e00:9fff:32;a000:a48c:ac;a490:a4c6:ac;a4d0:a4ff:4f;a500:a62b:a7;a640:a69f:1e;a6a0:a6f7:7;a700:a721:19;a722:a787:4a;a788:a78a:19;a78b:a7dc:4a;a7f1:a7ff:4a;a800:a82c:90;a830:a839:19;a840:a877:7e;a880:a8c5:84;a8ce:a8d9:84;a8e0:a8ff:20;a900:a92d:42;a92e:a92e:19;a92f:a92f:42;a930:a953:81;a95f:a95f:81;a960:a97c:33;a980:a9cd:3d;a9cf:a9cf:19;a9d0:a9d9:3d;a9de:a9df:3d;a9e0:a9fe:63;aa00:aa36:16;aa40:aa4d:16;aa50:aa59:16;aa5c:aa5f:16;aa60:aa7f:63;aa80:aac2:96;aadb:aadf:96;aae0:aaf6:5a;ab01:ab06:27;ab09:ab0e:27;ab11:ab16:27;ab20:ab26:27;ab28:ab2e:27;ab30:ab5a:4a;ab5b:ab5b:19;ab5c:ab64:4a;ab65:ab65:2d;ab66:ab69:4a;ab6a:ab6b:19;ab70:abbf:17;abc0:abed:5a;abf0:abf9:5a;ac00:d7a3:33;d7b0:d7c6:33;d7cb:d7fb:33;f900:fa6d:32;fa70:fad9:32;fb00:fb06:4a;fb13:fb17:4;fb1d:fb36:37;fb38:fb3c:37;fb3e:fb3e:37;fb40:fb41:37;fb43:fb44:37;fb46:fb4f:37;fb50:fd3d:3;fd3e:fd3f:19;fd40:fdcf:3;fdf0:fdff:3;fe00:fe0f:3a;fe10:fe19:19;fe20:fe2d:3a;fe2e:fe2f:1e;fe30:fe52:19;fe54:fe66:19;fe68:fe6b:19;fe70:fe74:3;fe76:fefc:3;feff:feff:19;ff01:ff20:19;ff21:ff3a:4a;ff3b:ff40:19;ff41:ff5a:4a;ff5b:ff65:19;ff66:ff6f:40;ff70:ff70:19;ff71:ff9d:40;ff9e:ff9f:19;ffa0:ffbe:33;ffc2:ffc7:33;ffca:ffcf:33;ffd2:ffd7:33;ffda:ffdc:33;ffe0:ffe6:19;ffe8:ffee:19;fff9:fffd:19;10000:1000b:4e;1000d:10026:4e;10028:1003a:4e;1003c:1003d:4e;1003f:1004d:4e;10050:1005d:4e;10080:100fa:4e;10100:10102:19;10107:10133:19;10137:1013f:19;10140:1018e:2d;10190:1019c:19;101a0:101a0:2d;101d0:101fc:19;101fd:101fd:3a;10280:1029c:50;102a0:102d0:13;102e0:102e0:3a;102e1:102fb:19;10300:10323:70;1032d:1032f:70;10330:1034a:2b;10350:1037a:72;10380:1039d:a6;1039f:1039f:a6;103a0:103c3:73;103c8:103d5:73;10400:1044f:1f;10450:1047f:86;10480:1049d:7a;104a0:104a9:7a;104b0:104d3:79;104d8:104fb:79;10500:10527:25;10530:10563:14;1056f:1056f:14;10570:1057a:a8;1057c:1058a:a8;1058c:10592:a8;10594:10595:a8;10597:105a1:a8;105a3:105b1:a8;105b3:105b9:a8;105bb:105bc:a8;105c0:105f3:a2;10600:10736:4d;10740:10755:4d;10760:10767:4d;10780:10785:4a;10787:107b0:4a;107b2:107ba:4a;10800:10805:1c;10808:10808:1c;1080a:10835:1c;10837:10838:1c;1083c:1083c:1c;1083f:1083f:1c;10840:10855:39;10857:1085f:39;10860:1087f:7c;10880:1089e:64;108a7:108af:64;108e0:108f2:36;108f4:108f5:36;108fb:108ff:36;10900:1091b:7f;1091f:1091f:7f;10920:10939:51;1093f:1093f:51;10940:10959:88;10980:1099f:5d;109a0:109b7:5c;109bc:109cf:5c;109d2:109ff:5c;10a00:10a03:43;10a05:10a06:43;10a0c:10a13:43;10a15:10a17:43;10a19:10a35:43;10a38:10a3a:43;10a3f:10a48:43;10a50:10a58:43;10a60:10a7f:75;10a80:10a9f:71;10ac0:10ae6:56;10aeb:10af6:56;10b00:10b35:5;10b39:10b3f:5;10b40:10b55:3c;10b58:10b5f:3c;10b60:10b72:3b;10b78:10b7f:3b;10b80:10b91:80;10b99:10b9c:80;10ba9:10baf:80;10c00:10c48:76;10c80:10cb2:6f;10cc0:10cf2:6f;10cfa:10cff:6f;10d00:10d27:34;10d30:10d39:34;10d40:10d65:28;10d69:10d85:28;10d8e:10d8f:28;10e60:10e7e:3;10e80:10ea9:ab;10eab:10ead:ab;10eb0:10eb1:ab;10ec2:10ec7:3;10ed0:10ed8:3;10efa:10eff:3;10f00:10f27:74;10f30:10f59:8b;10f70:10f89:77;10fb0:10fcb:18;10fe0:10ff6:26;11000:1104d:e;11052:11075:e;1107f:1107f:e;11080:110c2:3e;110cd:110cd:3e;110d0:110e8:8c;110f0:110f9:8c;11100:11134:15;11136:11147:15;11150:11176:52;11180:111df:85;111e1:111f4:8a;11200:11211:46;11213:11241:46;11280:11286:62;11288:11288:62;1128a:1128d:62;1128f:1129d:62;1129f:112a9:62;112b0:112ea:47;112f0:112f9:47;11300:11303:2c;11305:1130c:2c;1130f:11310:2c;11313:11328:2c;1132a:11330:2c;11332:11333:2c;11335:11339:2c;1133b:1133b:3a;1133c:11344:2c;11347:11348:2c;1134b:1134d:2c;11350:11350:2c;11357:11357:2c;1135d:11363:2c;11366:1136c:2c;11370:11374:2c;11380:11389:a5;1138b:1138b:a5;1138e:1138e:a5;11390:113b5:a5;113b7:113c0:a5;113c2:113c2:a5;113c5:113c5:a5;113c7:113ca:a5;113cc:113d5:a5;113d7:113d8:a5;113e1:113e2:a5;11400:1145b:68;1145d:11461:68;11480:114c7:a1;114d0:114d9:a1;11580:115b5:87;115b8:115dd:87;11600:11644:5f;11650:11659:5f;11660:1166c:60;11680:116b9:98;116c0:116c9:98;116d0:116e3:63;11700:1171a:1;1171d:1172b:1;11730:11746:1;11800:1183b:22;118a0:118f2:aa;118ff:118ff:aa;11900:11906:21;11909:11909:21;1190c:11913:21;11915:11916:21;11918:11935:21;11937:11938:21;1193b:11946:21;11950:11959:21;119a0:119a7:66;119aa:119d7:66;119da:119e4:66;11a00:11a47:ad;11a50:11aa2:8d;11ab0:11abf:12;11ac0:11af8:7d;11b00:11b09:20;11b60:11b67:85;11bc0:11be1:8f;11bf0:11bf9:8f;11c00:11c08:c;11c0a:11c36:c;11c38:11c45:c;11c50:11c6c:c;11c70:11c8f:57;11c92:11ca7:57;11ca9:11cb6:57;11d00:11d06:58;11d08:11d09:58;11d0b:11d36:58;11d3a:11d3a:58;11d3c:11d3d:58;11d3f:11d47:58;11d50:11d59:58;11d60:11d65:2f;11d67:11d68:2f;11d6a:11d8e:2f;11d90:11d91:2f;11d93:11d98:2f;11da0:11da9:2f;11db0:11ddb:a3;11de0:11de9:a3;11ee0:11ef8:53;11f00:11f10:41;11f12:11f3a:41;11f3e:11f5a:41;11fb0:11fb0:4f;11fc0:11ff1:99;11fff:11fff:99;12000:12399:1b;12400:1246e:1b;12470:12474:1b;12480:12543:1b;12f90:12ff2:1d;13000:13455:24;13460:143fa:24;14400:14646:2;16100:16139:31;16800:16a38:7;16a40:16a5e:61;16a60:16a69:61;16a6e:16a6f:61;16a70:16abe:9a;16ac0:16ac9:9a;16ad0:16aed:8;16af0:16af5:8;16b00:16b45:7b;16b50:16b59:7b;16b5b:16b61:7b;16b63:16b77:7b;16b7d:16b8f:7b;16d40:16d79:48;16e40:16e9a:59;16ea0:16eb8:b;16ebb:16ed3:b;16f00:16f4a:5e;16f4f:16f87:5e;16f8f:16f9f:5e;16fe0:16fe0:9b;16fe1:16fe1:6a;16fe2:16fe3:32;16fe4:16fe4:44;16ff0:16ff6:32;17000:18aff:9b;18b00:18cd5:44;18cff:18cff:44;18d00:18d1e:9b;18d80:18df2:9b;1aff0:1aff3:40;1aff5:1affb:40;1affd:1affe:40;1b000:1b000:40;1b001:1b11f:38;1b120:1b122:40;1b132:1b132:38;1b150:1b152:38;1b155:1b155:40;1b164:1b167:40;1b170:1b2fb:6a;1bc00:1bc6a:23;1bc70:1bc7c:23;1bc80:1bc88:23;1bc90:1bc99:23;1bc9c:1bc9f:23;1bca0:1bca3:19;1cc00:1ccfc:19;1cd00:1ceb3:19;1ceba:1ced0:19;1cee0:1cef0:19;1cf00:1cf2d:3a;1cf30:1cf46:3a;1cf50:1cfc3:19;1d000:1d0f5:19;1d100:1d126:19;1d129:1d166:19;1d167:1d169:3a;1d16a:1d17a:19;1d17b:1d182:3a;1d183:1d184:19;1d185:1d18b:3a;1d18c:1d1a9:19;1d1aa:1d1ad:3a;1d1ae:1d1ea:19;1d200:1d245:2d;1d2c0:1d2d3:19;1d2e0:1d2f3:19;1d300:1d356:19;1d360:1d378:19;1d400:1d454:19;1d456:1d49c:19;1d49e:1d49f:19;1d4a2:1d4a2:19;1d4a5:1d4a6:19;1d4a9:1d4ac:19;1d4ae:1d4b9:19;1d4bb:1d4bb:19;1d4bd:1d4c3:19;1d4c5:1d505:19;1d507:1d50a:19;1d50d:1d514:19;1d516:1d51c:19;1d51e:1d539:19;1d53b:1d53e:19;1d540:1d544:19;1d546:1d546:19;1d54a:1d550:19;1d552:1d6a5:19;1d6a8:1d7cb:19;1d7ce:1d7ff:19;1d800:1da8b:89;1da9b:1da9f:89;1daa1:1daaf:89;1df00:1df1e:4a;1df25:1df2a:4a;1e000:1e006:2a;1e008:1e018:2a;1e01b:1e021:2a;1e023:1e024:2a;1e026:1e02a:2a;1e030:1e06d:1e;1e08f:1e08f:1e;1e100:1e12c:6b;1e130:1e13d:6b;1e140:1e149:6b;1e14e:1e14f:6b;1e290:1e2ae:a4;1e2c0:1e2f9:a9;1e2ff:1e2ff:a9;1e4d0:1e4f9:65;1e5d0:1e5fa:6e;1e5ff:1e5ff:6e;1e6c0:1e6de:97;1e6e0:1e6f5:97;1e6fe:1e6ff:97;1e7e0:1e7e6:27;1e7e8:1e7eb:27;1e7ed:1e7ee:27;1e7f0:1e7fe:27;1e800:1e8c4:5b;1e8c7:1e8d6:5b;1e900:1e94b:0;1e950:1e959:0;1e95e:1e95f:0;1ec71:1ecb4:19;1ed01:1ed3d:19;1ee00:1ee03:3;1ee05:1ee1f:3;1ee21:1ee22:3;1ee24:1ee24:3;1ee27:1ee27:3;1ee29:1ee32:3;1ee34:1ee37:3;1ee39:1ee39:3;1ee3b:1ee3b:3;1ee42:1ee42:3;1ee47:1ee47:3;1ee49:1ee49:3;1ee4b:1ee4b:3;1ee4d:1ee4f:3;1ee51:1ee52:3;1ee54:1ee54:3;1ee57:1ee57:3;1ee59:1ee59:3;1ee5b:1ee5b:3;1ee5d:1ee5d:3;1ee5f:1ee5f:3;1ee61:1ee62:3;1ee64:1ee64:3;1ee67:1ee6a:3;1ee6c:1ee72:3;1ee74:1ee77:3;1ee79:1ee7c:3;1ee7e:1ee7e:3;1ee80:1ee89:3;1ee8b:1ee9b:3;1eea1:1eea3:3;1eea5:1eea9:3;1eeab:1eebb:3;1eef0:1eef1:3;1f000:1f02b:19;1f030:1f093:19;1f0a0:1f0ae:19;1f0b1:1f0bf:19;1f0c1:1f0cf:19;1f0d1:1f0f5:19;1f100:1f1ad:19;1f1e6:1f1ff:19;1f200:1f200:38;1f201:1f202:19;1f210:1f23b:19;1f240:1f248:19;1f250:1f251:19;1f260:1f265:19;1f300:1f6d8:19;1f6dc:1f6ec:19;1f6f0:1f6fc:19;1f700:1f7d9:19;1f7e0:1f7eb:19;1f7f0:1f7f0:19;1f800:1f80b:19;1f810:1f847:19;1f850:1f859:19;1f860:1f887:19;1f890:1f8ad:19;1f8b0:1f8bb:19;1f8c0:1f8c1:19;1f8d0:1f8d8:19;1f900:1fa57:19;1fa60:1fa6d:19;1fa70:1fa7c:19;1fa80:1fa8a:19;1fa8e:1fac6:19;1fac8:1fac8:19;1facd:1fadc:19;1fadf:1faea:19;1faef:1faf8:19;1fb00:1fb92:19;1fb94:1fbfa:19;20000:2a6df:32;2a700:2b81d:32;2b820:2cead:32;2ceb0:2ebe0:32;2ebf0:2ee5d:32;2f800:2fa1d:32;30000:3134a:32;31350:33479:32;e0001:e0001:19;e0020:e007f:19;e0100:e01ef:3a"
)
