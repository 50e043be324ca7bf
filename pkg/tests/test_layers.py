import math

import numpy as np
import pytest

from mtme import layers as L
from mtme import tensor as T
from mtme.rng import Rng
from mtme.tensor import ShapeError, Tensor


class TestDense:
    def test_identity(self):
        p = L.DenseParams(Tensor(np.eye(3), requires_grad=True),
                          T.zeros((3,)), "none")
        x = Tensor([[1.0, 2, 3], [4, 5, 6]])
        assert np.array_equal(L.dense_forward(x, p).data, x.data)

    def test_sigmoid_hand(self):
        # x=[1,1], W=[[1],[1]], b=[-2] -> sigma(0) = 0.5
        p = L.DenseParams(Tensor([[1.0], [1.0]], requires_grad=True),
                          Tensor([-2.0], requires_grad=True), "sigmoid")
        out = L.dense_forward(Tensor([[1.0, 1.0]]), p)
        assert out.data.tolist() == [[0.5]]

    def test_relu_all_negative(self):
        p = L.DenseParams(Tensor([[1.0], [1.0]], requires_grad=True),
                          Tensor([-10.0], requires_grad=True), "relu")
        out = L.dense_forward(Tensor([[1.0, 2.0], [0.5, 0.25]]), p)
        assert np.array_equal(out.data, np.zeros((2, 1)))

    def test_shape_mismatch(self):
        p = L.dense_params(3, 2, "none", Rng(0))
        with pytest.raises(ShapeError):
            L.dense_forward(Tensor([[1.0, 2.0]]), p)


class TestConv1d:
    def test_identity_kernel(self):
        # single filter [1], one channel: output is relu(x + bias)
        p = L.Conv1dParams(Tensor(np.ones((1, 1, 1)), requires_grad=True),
                           Tensor([0.5], requires_grad=True))
        x = Tensor([[1.0], [-2.0], [3.0]])
        out = L.conv1d_forward(x, p)
        assert out.data.tolist() == [[1.5], [0.0], [3.5]]

    def test_sliding_sum_hand(self):
        # x=[1,2,3], kernel=[1,1], bias 0 -> [1+2, 2+3] = [3, 5]
        p = L.Conv1dParams(Tensor(np.ones((1, 1, 2)), requires_grad=True),
                           T.zeros((1,)))
        out = L.conv1d_forward(Tensor([[1.0], [2.0], [3.0]]), p)
        assert out.data.tolist() == [[3.0], [5.0]]

    def test_output_shape_arithmetic(self):
        p = L.conv1d_params(64, 8, 2, Rng(1))
        x = Tensor(Rng(2).uniform(100 * 8).reshape(100, 8))
        assert L.conv1d_forward(x, p).shape == (99, 64)

    @pytest.mark.parametrize("length", [2, 3, 4, 5, 6])
    def test_output_length_property(self, length):
        p = L.conv1d_params(3, 2, 2, Rng(3))
        x = Tensor(Rng(4).uniform(length * 2).reshape(length, 2))
        assert L.conv1d_forward(x, p).shape == (length - 1, 3)

    def test_too_short_error(self):
        p = L.conv1d_params(3, 2, 4, Rng(5))
        with pytest.raises(L.SequenceTooShortError):
            L.conv1d_forward(Tensor(np.zeros((3, 2))), p)

    def test_cross_correlation_oracle(self):
        # brute-force correlation: out[t,f] = sum_{c,j} x[t+j,c] K[f,c,j] + b[f], relu
        rng = Rng(6)
        p = L.conv1d_params(3, 2, 2, rng)
        x = np.asarray(rng.uniform(10, -1, 1).reshape(5, 2))
        expect = np.zeros((4, 3))
        for t in range(4):
            for f in range(3):
                acc = p.bias.data[f]
                for c in range(2):
                    for j in range(2):
                        acc += x[t + j, c] * p.kernels.data[f, c, j]
                expect[t, f] = max(acc, 0.0)
        out = L.conv1d_forward(Tensor(x), p)
        assert np.allclose(out.data, expect, atol=1e-12)


def _zero_gru(in_size, hidden):
    z = lambda shape: Tensor(np.zeros(shape), requires_grad=True)
    return L.GruParams(*(z((in_size, hidden)) if f.startswith("w")
                         else z((hidden, hidden)) if f.startswith("u")
                         else z((hidden,))
                         for f in ("wz", "uz", "bz", "wr", "ur", "br", "wh", "uh", "bh")))


def _zero_lstm(in_size, hidden):
    z = lambda shape: Tensor(np.zeros(shape), requires_grad=True)
    fields = ("wi", "ui", "bi", "wf", "uf", "bf", "wo", "uo", "bo", "wg", "ug", "bg")
    return L.LstmParams(*(z((in_size, hidden)) if f.startswith("w")
                          else z((hidden, hidden)) if f.startswith("u")
                          else z((hidden,))
                          for f in fields))


class TestGru:
    def test_zero_weights_halve_state(self):
        # z = r = sigma(0) = 0.5, candidate tanh(0) = 0, so h' = 0.5 h
        p = _zero_gru(2, 2)
        h0 = Tensor([0.8, -0.4])
        x = Tensor(np.ones((3, 2)))
        out = L.gru_forward(x, p, h0)
        expect = np.stack([[0.8 * 0.5 ** t, -0.4 * 0.5 ** t] for t in (1, 2, 3)])
        assert np.allclose(out.data, expect, atol=1e-12)

    def test_scalar_cell_hand(self):
        # independent recomputation of one cell step with plain math
        p = _zero_gru(1, 1)
        wz, uz, bz = 0.5, 0.25, 0.1
        wr, ur, br = -0.3, 0.2, 0.0
        wh, uh, bh = 0.7, -0.4, 0.2
        for tensor, value in ((p.wz, wz), (p.uz, uz), (p.bz, bz), (p.wr, wr),
                              (p.ur, ur), (p.br, br), (p.wh, wh), (p.uh, uh), (p.bh, bh)):
            tensor.data[...] = value
        x, h = 0.8, 0.5
        sig = lambda v: 1.0 / (1.0 + math.exp(-v))
        z = sig(wz * x + uz * h + bz)
        r = sig(wr * x + ur * h + br)
        cand = math.tanh(wh * x + uh * (r * h) + bh)
        expect = (1 - z) * h + z * cand
        out = L.gru_forward(Tensor([[x]]), p, Tensor([h]))
        assert out.item() == pytest.approx(expect, rel=1e-12)

    def test_gradcheck_five_steps(self):
        rng = Rng(11)
        p = L.gru_params(2, 3, rng)
        x = Tensor(rng.uniform(10, -1, 1).reshape(5, 2))
        w = Tensor(rng.uniform(15, -1, 1).reshape(5, 3))
        params = [getattr(p, f) for f in ("wz", "uz", "bz", "wr", "ur", "br", "wh", "uh", "bh")]
        err = T.grad_check(lambda: T.reduce_sum(L.gru_forward(x, p) * w), params)
        assert err <= 1e-4


class TestLstm:
    def test_zero_weights_halve_cell(self):
        # gates at 0.5, candidate 0: c' = c/2, h = 0.5 tanh(c')
        p = _zero_lstm(2, 1)
        c0 = Tensor([0.6])
        h0 = Tensor([0.0])
        out = L.lstm_forward(Tensor(np.ones((3, 2))), p, h0, c0)
        cs = [0.6 * 0.5 ** t for t in (1, 2, 3)]
        expect = [[0.5 * math.tanh(c)] for c in cs]
        assert np.allclose(out.data, expect, atol=1e-12)

    def test_scalar_cell_hand(self):
        p = _zero_lstm(1, 1)
        vals = {"wi": 0.4, "ui": 0.1, "bi": -0.2, "wf": 0.3, "uf": -0.1, "bf": 0.5,
                "wo": -0.2, "uo": 0.3, "bo": 0.1, "wg": 0.6, "ug": 0.2, "bg": 0.0}
        for name, value in vals.items():
            getattr(p, name).data[...] = value
        x, h, c = 0.9, 0.3, -0.2
        sig = lambda v: 1.0 / (1.0 + math.exp(-v))
        i = sig(vals["wi"] * x + vals["ui"] * h + vals["bi"])
        f = sig(vals["wf"] * x + vals["uf"] * h + vals["bf"])
        o = sig(vals["wo"] * x + vals["uo"] * h + vals["bo"])
        g = math.tanh(vals["wg"] * x + vals["ug"] * h + vals["bg"])
        c_new = f * c + i * g
        expect = o * math.tanh(c_new)
        out = L.lstm_forward(Tensor([[x]]), p, Tensor([h]), Tensor([c]))
        assert out.item() == pytest.approx(expect, rel=1e-12)

    def test_gradcheck_five_steps(self):
        rng = Rng(12)
        p = L.lstm_params(2, 3, rng)
        x = Tensor(rng.uniform(10, -1, 1).reshape(5, 2))
        w = Tensor(rng.uniform(15, -1, 1).reshape(5, 3))
        fields = ("wi", "ui", "bi", "wf", "uf", "bf", "wo", "uo", "bo", "wg", "ug", "bg")
        err = T.grad_check(lambda: T.reduce_sum(L.lstm_forward(x, p) * w),
                           [getattr(p, f) for f in fields])
        assert err <= 1e-4


class TestBidirectional:
    def test_palindrome_mirror(self):
        rng = Rng(13)
        p = L.gru_params(2, 3, rng)
        row = np.asarray(rng.uniform(2, -1, 1))
        x = Tensor(np.stack([row, row * 0.5, row]))  # palindromic in time
        out = L.bidirectional(x, p, p).data
        fwd_half, bwd_half = out[:, :3], out[:, 3:]
        assert np.allclose(fwd_half, bwd_half[::-1], atol=1e-12)

    def test_channel_count_128(self):
        rng = Rng(14)
        fwd = L.gru_params(4, 128, rng)
        bwd = L.gru_params(4, 128, rng)
        x = Tensor(rng.uniform(8, -1, 1).reshape(2, 4))
        assert L.bidirectional(x, fwd, bwd).shape == (2, 256)

    def test_single_step_equals_cells(self):
        rng = Rng(15)
        fwd = L.gru_params(2, 3, rng)
        bwd = L.gru_params(2, 3, rng)
        x = Tensor(rng.uniform(2, -1, 1).reshape(1, 2))
        out = L.bidirectional(x, fwd, bwd).data
        h_f = L.gru_cell(x, T.zeros((1, 3)), fwd).data
        h_b = L.gru_cell(x, T.zeros((1, 3)), bwd).data
        assert np.allclose(out[:, :3], h_f) and np.allclose(out[:, 3:], h_b)

    def test_hidden_mismatch_error(self):
        with pytest.raises(ShapeError):
            L.bidirectional(Tensor(np.zeros((2, 2))),
                            L.gru_params(2, 3, Rng(0)), L.gru_params(2, 4, Rng(0)))

    def test_forward_half_layout(self):
        # zero backward params keep channels [H, 2H) at the zero-state decay
        fwd = L.gru_params(2, 2, Rng(16))
        bwd = _zero_gru(2, 2)
        x = Tensor(Rng(17).uniform(4, -1, 1).reshape(2, 2))
        out = L.bidirectional(x, fwd, bwd).data
        assert np.allclose(out[:, 2:], 0.0)
        assert not np.allclose(out[:, :2], 0.0)


class TestEmbedding:
    def _table(self):
        m = np.zeros((6, 4))
        for row in range(2, 6):
            m[row] = row
        return L.EmbeddingTable(m)

    def test_padding_row_zero(self):
        out = L.embed(np.asarray([0]), self._table())
        assert np.array_equal(out.data, np.zeros((1, 4)))

    def test_known_id_exact_row(self):
        out = L.embed(np.asarray([3]), self._table())
        assert np.array_equal(out.data[0], np.full(4, 3.0))

    def test_sequence_lookup(self):
        out = L.embed(np.asarray([5, 0, 5]), self._table())
        assert np.array_equal(out.data[0], np.full(4, 5.0))
        assert np.array_equal(out.data[1], np.zeros(4))
        assert np.array_equal(out.data[2], np.full(4, 5.0))

    def test_out_of_range(self):
        with pytest.raises(IndexError, match="6"):
            L.embed(np.asarray([6]), self._table())

    def test_table_receives_no_gradient(self):
        table = self._table()
        w = Tensor(np.ones((4, 1)), requires_grad=True)
        with T.Tape() as tape:
            x = L.embed(np.asarray([2, 3]), table)
            loss = T.reduce_sum(T.matmul(x, w))
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, table.matrix, tape) is None
        assert T.grad_for(grads, w, tape) is not None

    def test_nonzero_reserved_rows_rejected(self):
        with pytest.raises(ValueError):
            L.EmbeddingTable(np.ones((3, 2)))


class TestSpatialDropout:
    def test_inference_identity(self):
        x = Tensor(Rng(20).uniform(12).reshape(4, 3))
        out = L.spatial_dropout(x, L.SpatialDropoutCfg(0.5), Rng(1), training=False)
        assert out is x

    def test_zero_rate_identity(self):
        x = Tensor(Rng(21).uniform(12).reshape(4, 3))
        out = L.spatial_dropout(x, L.SpatialDropoutCfg(0.0), Rng(1), training=True)
        assert out is x

    def test_channel_mask_pattern(self):
        # each channel is either all-zero or uniformly scaled by 2 over time
        x = Tensor(np.ones((5, 8)))
        out = L.spatial_dropout(x, L.SpatialDropoutCfg(0.5), Rng(99), training=True).data
        for c in range(8):
            column = out[:, c]
            assert np.all(column == 0.0) or np.all(column == 2.0)
        assert out.min() == 0.0 and out.max() == 2.0  # seed 99 hits both cases

    def test_expected_value_preserved(self):
        x = np.ones((3, 4))
        total = np.zeros_like(x)
        n = 400
        for seed in range(n):
            out = L.spatial_dropout(Tensor(x), L.SpatialDropoutCfg(0.25),
                                    Rng(seed), training=True)
            total += out.data
        # mean of mask is 1; sd of the mean over n draws of (0 or 4/3) masks
        sd = math.sqrt((0.25 / 0.75) / n)
        assert np.all(np.abs(total / n - 1.0) < 5 * sd)

    def test_invalid_rate(self):
        with pytest.raises(ValueError):
            L.SpatialDropoutCfg(1.0)

    def test_stepwise_matches_channel_rule(self):
        steps = [Tensor(np.ones((2, 6))) for _ in range(4)]
        out = L.dropout_steps(steps, 0.5, Rng(7), training=True)
        for s in out:
            assert set(np.unique(s.data)) <= {0.0, 2.0}


class TestGlorot:
    def test_bound_formula(self):
        t = L.init_glorot((100, 100), Rng(30))
        limit = math.sqrt(6.0 / 200.0)
        assert np.all(np.abs(t.data) <= limit)
        assert t.data.max() > 0.9 * limit  # actually fills the range

    def test_same_seed_identical(self):
        a = L.init_glorot((20, 20), Rng(31))
        b = L.init_glorot((20, 20), Rng(31))
        assert np.array_equal(a.data, b.data)

    def test_mean_near_zero(self):
        t = L.init_glorot((100, 100), Rng(32))
        limit = math.sqrt(6.0 / 200.0)
        se = limit / math.sqrt(3.0 * t.size)
        assert abs(t.data.mean()) < 3 * se

    def test_non_2d_rejected(self):
        with pytest.raises(ShapeError):
            L.init_glorot((4,), Rng(33))
