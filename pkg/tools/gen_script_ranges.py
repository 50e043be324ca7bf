"""Regenerate src/mtme/_script_ranges.py from the `regex` package's Unicode tables.

Run from the repo root:

    python tools/gen_script_ranges.py

The output module is committed so that mtme itself has no runtime dependency
on `regex` and the Unicode version stays pinned.  Re-run only when bumping
the Unicode version on purpose.
"""

import sys
from datetime import date

import regex
from regex import _regex_core

# Canonical long script names (UCD PropertyValueAliases).  The regex module
# only stores squashed uppercase forms, so the pretty spellings live here and
# are validated against its tables below.
CANONICAL_NAMES = [
    "Adlam", "Ahom", "Anatolian_Hieroglyphs", "Arabic", "Armenian", "Avestan",
    "Balinese", "Bamum", "Bassa_Vah", "Batak", "Bengali", "Beria_Erfe",
    "Bhaiksuki", "Bopomofo", "Brahmi", "Braille", "Buginese", "Buhid",
    "Canadian_Aboriginal", "Carian", "Caucasian_Albanian", "Chakma", "Cham",
    "Cherokee", "Chorasmian", "Common", "Coptic", "Cuneiform", "Cypriot",
    "Cypro_Minoan", "Cyrillic", "Deseret", "Devanagari", "Dives_Akuru",
    "Dogra", "Duployan", "Egyptian_Hieroglyphs", "Elbasan", "Elymaic",
    "Ethiopic", "Garay", "Georgian", "Glagolitic", "Gothic", "Grantha",
    "Greek", "Gujarati", "Gunjala_Gondi", "Gurmukhi", "Gurung_Khema", "Han",
    "Hangul", "Hanifi_Rohingya", "Hanunoo", "Hatran", "Hebrew", "Hiragana",
    "Imperial_Aramaic", "Inherited", "Inscriptional_Pahlavi",
    "Inscriptional_Parthian", "Javanese", "Kaithi", "Kannada", "Katakana",
    "Kawi", "Kayah_Li", "Kharoshthi", "Khitan_Small_Script", "Khmer",
    "Khojki", "Khudawadi", "Kirat_Rai", "Lao", "Latin", "Lepcha", "Limbu",
    "Linear_A", "Linear_B", "Lisu", "Lycian", "Lydian", "Mahajani",
    "Makasar", "Malayalam", "Mandaic", "Manichaean", "Marchen",
    "Masaram_Gondi", "Medefaidrin", "Meetei_Mayek", "Mende_Kikakui",
    "Meroitic_Cursive", "Meroitic_Hieroglyphs", "Miao", "Modi", "Mongolian",
    "Mro", "Multani", "Myanmar", "Nabataean", "Nag_Mundari", "Nandinagari",
    "New_Tai_Lue", "Newa", "Nko", "Nushu", "Nyiakeng_Puachue_Hmong", "Ogham",
    "Ol_Chiki", "Ol_Onal", "Old_Hungarian", "Old_Italic", "Old_North_Arabian",
    "Old_Permic", "Old_Persian", "Old_Sogdian", "Old_South_Arabian",
    "Old_Turkic", "Old_Uyghur", "Oriya", "Osage", "Osmanya", "Pahawh_Hmong",
    "Palmyrene", "Pau_Cin_Hau", "Phags_Pa", "Phoenician", "Psalter_Pahlavi",
    "Rejang", "Runic", "Samaritan", "Saurashtra", "Sharada", "Shavian",
    "Siddham", "Sidetic", "SignWriting", "Sinhala", "Sogdian", "Sora_Sompeng",
    "Soyombo", "Sundanese", "Sunuwar", "Syloti_Nagri", "Syriac", "Tagalog",
    "Tagbanwa", "Tai_Le", "Tai_Tham", "Tai_Viet", "Tai_Yo", "Takri", "Tamil",
    "Tangsa", "Tangut", "Telugu", "Thaana", "Thai", "Tibetan", "Tifinagh",
    "Tirhuta", "Todhri", "Tolong_Siki", "Toto", "Tulu_Tigalari", "Ugaritic",
    "Vai", "Vithkuqi", "Wancho", "Warang_Citi", "Yezidi", "Yi",
    "Zanabazar_Square",
]

# Unicode version shipped with the regex release in use; bump together.
UNICODE_VERSION = "17.0.0"

MAX_CP = 0x10FFFF


def squash(name: str) -> str:
    return name.replace("_", "").upper()


def main() -> int:
    _, value_ids = _regex_core.PROPERTIES["SCRIPT"]
    known = {squash(n) for n in CANONICAL_NAMES} | {"UNKNOWN"}
    long_forms = {v for v in value_ids if len(v) > 4 or v in ("MIAO", "NEWA", "AHOM", "MODI", "TOTO", "THAI", "CHAM", "LISU", "YI", "VAI", "NKO", "LAO", "HAN", "MRO")}
    missing = {v for v in long_forms if v not in known and v != "KATAKANAORHIRAGANA"}
    if missing:
        print(f"script values in regex but not in CANONICAL_NAMES: {sorted(missing)}")
        return 1

    # One char per codepoint; lone surrogates are representable in str and
    # carry no script, so indexes equal codepoints.
    everything = "".join(chr(c) for c in range(MAX_CP + 1))

    entries = []  # (start, end, name_index)
    for idx, name in enumerate(CANONICAL_NAMES):
        pat = regex.compile(rf"[\p{{Script={name}}}]+", regex.V1)
        spans = [m.span() for m in pat.finditer(everything)]
        if not spans:
            print(f"warning: no codepoints for {name}")
        for a, b in spans:
            entries.append((a, b - 1, idx))
    entries.sort()

    packed = ";".join(f"{a:x}:{b:x}:{i:x}" for a, b, i in entries)
    names = "".join(f"    {n!r},\n" for n in CANONICAL_NAMES)
    out = (
        f'"""Unicode script property ranges (generated file).\n\n'
        f"Source: `regex` {regex.__version__} property tables (Unicode {UNICODE_VERSION}).\n"
        f"Regenerate with tools/gen_script_ranges.py; generated {date.today().isoformat()}.\n"
        f'"""\n\n'
        f'UNICODE_VERSION = "{UNICODE_VERSION}"\n\n'
        f"SCRIPT_NAMES = (\n{names})\n\n"
        f"# Sorted, disjoint ranges packed as start:end:name_index hex triples.\n"
        f'PACKED_RANGES = (\n    "{packed}"\n)\n'
    )
    with open("src/mtme/_script_ranges.py", "w", encoding="utf-8") as fh:
        fh.write(out)
    print(f"wrote {len(entries)} ranges for {len(CANONICAL_NAMES)} scripts")
    return 0


if __name__ == "__main__":
    sys.exit(main())
