import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtme import metrics as M
from mtme.rng import Rng


class TestCounts:
    def test_precision_hand(self):
        assert M.precision(M.ConfusionCounts(tp=2, fp=1)) == pytest.approx(2 / 3)

    def test_precision_degenerate_zero(self):
        assert M.precision(M.ConfusionCounts()) == 0.0

    def test_precision_perfect(self):
        assert M.precision(M.ConfusionCounts(tp=5, fp=0)) == 1.0

    def test_recall_hand(self):
        assert M.recall(M.ConfusionCounts(tp=3, fn=1)) == 0.75

    def test_recall_degenerate_zero(self):
        assert M.recall(M.ConfusionCounts(tp=0, fn=0)) == 0.0

    def test_recall_perfect(self):
        assert M.recall(M.ConfusionCounts(tp=4, fn=0)) == 1.0

    def test_total_invariant(self):
        c = M.ConfusionCounts(tp=1, fp=2, fn=3, tn=4)
        assert c.total == 10


class TestF1:
    def test_symmetric_inputs_give_same_value(self):
        assert M.f1(0.3, 0.8) == M.f1(0.8, 0.3)

    def test_equal_inputs(self):
        assert M.f1(0.64, 0.64) == pytest.approx(0.64)

    def test_zero_convention(self):
        assert M.f1(0.0, 0.0) == 0.0

    def test_table_cell_toxic_birnncnn(self):
        # reference-table cell: P1=0.64, R1=0.81 renders as 0.71
        assert M.display_round(M.f1(0.64, 0.81)) == "0.71"

    def test_table_cell_severe_toxic_lr(self):
        # reference-table cell: P1=0.37, R1=0.20 renders as 0.26
        assert M.display_round(M.f1(0.37, 0.20)) == "0.26"


class TestConfusionFromPredictions:
    def test_hand_case(self):
        c = M.confusion_from_predictions([0.9, 0.1], [1, 0])
        assert (c.tp, c.tn, c.fp, c.fn) == (1, 1, 0, 0)

    def test_zero_threshold_everything_positive(self):
        c = M.confusion_from_predictions([0.3, 0.0, 0.9], [1, 0, 0], threshold=0.0)
        assert c.fp + c.tp == 3

    def test_exact_half_counts_positive(self):
        c = M.confusion_from_predictions([0.5], [0])
        assert c.fp == 1 and c.tn == 0

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            M.confusion_from_predictions([0.5], [1, 0])

    def test_label_index_selects_column(self):
        probs = np.asarray([[0.9, 0.1], [0.2, 0.8]])
        targets = np.asarray([[1, 0], [0, 1]])
        c = M.confusion_from_predictions(probs, targets, label_index=1)
        assert (c.tp, c.tn, c.fp, c.fn) == (1, 1, 0, 0)

    def test_brute_force_recount_oracle(self):
        rng = Rng(55)
        for trial in range(100):
            n = 5 + rng.below(60)
            probs = rng.uniform(n)
            targets = (rng.uniform(n) < 0.3).astype(int)
            c = M.confusion_from_predictions(probs, targets)
            tp = fp = fn = tn = 0
            for p, t in zip(probs, targets):  # independent elementwise recount
                predicted = p >= 0.5
                if predicted and t == 1:
                    tp += 1
                elif predicted and t == 0:
                    fp += 1
                elif not predicted and t == 1:
                    fn += 1
                else:
                    tn += 1
            assert (c.tp, c.fp, c.fn, c.tn) == (tp, fp, fn, tn)


def _report(label, tp, fp, fn, tn):
    counts = M.ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)
    return M.LabelReport(label, M.ClassMetrics.from_counts(counts),
                         M.ClassMetrics.from_counts(counts.complemented()))


def _report_with_f1(label, value0, value1):
    return M.LabelReport(
        label,
        M.ClassMetrics(value1, value1, value1),
        M.ClassMetrics(value0, value0, value0),
    )


class TestMacroAverage:
    def test_reference_total_average(self):
        # the all-four-datasets multitask column's class-1 F1 values
        values = [0.71, 0.38, 0.71, 0.48, 0.65, 0.58]
        reports = [_report_with_f1(f"l{i}", 0.99, v) for i, v in enumerate(values)]
        avg0, avg1 = M.macro_average(reports)
        assert avg1 == pytest.approx(sum(values) / 6)
        assert M.display_round(avg1) == "0.59"

    def test_identical_reports(self):
        reports = [_report_with_f1("a", 0.9, 0.4)] * 3
        assert M.macro_average(reports) == (pytest.approx(0.9), pytest.approx(0.4))

    def test_midpoint(self):
        reports = [_report_with_f1("a", 1.0, 1.0), _report_with_f1("b", 0.0, 0.0)]
        assert M.macro_average(reports) == (0.5, 0.5)

    def test_empty_error(self):
        with pytest.raises(ValueError):
            M.macro_average([])


class TestClassZero:
    def test_involution(self):
        rng = Rng(8)
        probs = rng.uniform(200)
        targets = (rng.uniform(200) < 0.4).astype(int)
        report = M.LabelReport.from_predictions("x", probs, targets)
        flipped = M.LabelReport.from_predictions("x", 1.0 - probs, 1 - targets,
                                                 threshold=0.5000000001)
        # class-0 metrics equal class-1 metrics of the complemented problem
        assert report.class0.precision == pytest.approx(flipped.class1.precision)
        assert report.class0.recall == pytest.approx(flipped.class1.recall)
        assert report.class0.f1 == pytest.approx(flipped.class1.f1)

    def test_undefined_flags(self):
        report = _report("x", tp=0, fp=0, fn=0, tn=5)
        assert "precision" in report.class1.undefined
        assert "recall" in report.class1.undefined
        assert report.class0.undefined == ()


class TestDisplayRound:
    @pytest.mark.parametrize("value,expected", [
        (0.715, "0.71"),
        (0.2596, "0.26"),
        (0.585, "0.59"),
        (1.0, "1.00"),
        (0.0, "0.00"),
        (0.994, "0.99"),
        (0.996, "1.00"),
    ])
    def test_cases(self, value, expected):
        assert M.display_round(value) == expected


class TestRender:
    def _tables(self):
        reports = [_report("toxic", 10, 5, 3, 82), _report("threat", 1, 0, 4, 95)]
        t1 = M.EvaluationTable("single", ["main"], ["rand"], reports)
        t2 = M.EvaluationTable("multi", ["main", "aux"], ["rand"], reports)
        return [t1, t2]

    def test_layout_rows(self):
        reports = [_report("toxic", 10, 5, 3, 82)]
        text = M.render_table([M.EvaluationTable("m", ["main"], ["rand"], reports)])
        for needle in ("P 0", "P 1", "R 0", "R 1", "F1 0", "F1 1", "Total average"):
            assert needle in text

    def test_flag_rows(self):
        text = M.render_table(self._tables())
        lines = text.splitlines()
        aux_line = next(l for l in lines if l.strip().startswith("aux"))
        assert "X" in aux_line
        assert "Datasets" in text and "Word embedding" in text

    def test_empty_error(self):
        with pytest.raises(ValueError):
            M.render_table([])

    def test_inconsistent_labels_error(self):
        t1 = M.EvaluationTable("a", [], [], [_report("x", 1, 1, 1, 1)])
        t2 = M.EvaluationTable("b", [], [], [_report("y", 1, 1, 1, 1)])
        with pytest.raises(ValueError):
            M.render_table([t1, t2])

    def test_report_files_roundtrip(self, tmp_path):
        tables = self._tables()
        paths = M.write_report(tables, tmp_path)
        rendered = paths["table"].read_text(encoding="utf-8")
        parsed = json.loads(paths["json"].read_text(encoding="utf-8"))
        # unrounded stored value re-renders to the displayed cell
        stored = parsed["models"][0]["labels"]["toxic"]["class1"]["precision"]
        assert stored == tables[0].reports[0].class1.precision
        assert M.display_round(stored) in rendered
        csv_text = paths["csv"].read_text(encoding="utf-8")
        assert "toxic" in csv_text and "__total_average__" in csv_text


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 50), st.integers(0, 50))
@settings(max_examples=200, deadline=None)
def test_metric_ranges_property(tp, fp, fn, tn):
    c = M.ConfusionCounts(tp=tp, fp=fp, fn=fn, tn=tn)
    p = M.precision(c)
    r = M.recall(c)
    value = M.f1(p, r)
    assert 0.0 <= p <= 1.0 and 0.0 <= r <= 1.0 and 0.0 <= value <= 1.0
    # harmonic mean never exceeds the arithmetic mean
    assert value <= (p + r) / 2 + 1e-12


@given(st.floats(0, 1), st.floats(0, 1))
@settings(max_examples=200, deadline=None)
def test_f1_symmetry_property(p, r):
    assert M.f1(p, r) == pytest.approx(M.f1(r, p), abs=1e-12)
