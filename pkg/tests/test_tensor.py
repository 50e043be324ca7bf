import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mtme import tensor as T
from mtme.rng import Rng
from mtme.tensor import DomainError, ShapeError, TapeError, Tensor


class TestMatmul:
    def test_identity(self):
        m = Tensor([[3.0, 4.0], [5.0, 6.0]])
        out = T.matmul(Tensor(np.eye(2)), m)
        assert np.array_equal(out.data, m.data)

    def test_hand_product(self):
        # [[1,2],[3,4]] @ [[5,6],[7,8]]: row x col by hand
        out = T.matmul(Tensor([[1.0, 2], [3, 4]]), Tensor([[5.0, 6], [7, 8]]))
        assert out.data.tolist() == [[19, 22], [43, 50]]

    def test_zeros(self):
        out = T.matmul(T.zeros((2, 3)), Tensor(np.arange(12.0).reshape(3, 4)))
        assert np.array_equal(out.data, np.zeros((2, 4)))

    def test_mismatch_names_both_shapes(self):
        with pytest.raises(ShapeError, match=r"\(2, 3\).*\(2, 4\)"):
            T.matmul(T.zeros((2, 3)), T.zeros((2, 4)))

    def test_gradients(self):
        a = Tensor([[1.0, 2], [3, 4]], requires_grad=True)
        b = Tensor([[5.0, 6], [7, 8]], requires_grad=True)
        with T.Tape() as tape:
            loss = T.reduce_sum(T.matmul(a, b))
        grads = T.backward(loss, tape)
        # d/dA sum(AB) = 1 @ B^T, d/dB = A^T @ 1
        assert np.array_equal(T.grad_for(grads, a, tape).data, np.ones((2, 2)) @ b.data.T)
        assert np.array_equal(T.grad_for(grads, b, tape).data, a.data.T @ np.ones((2, 2)))


class TestUnary:
    def test_sigmoid_symmetry(self):
        assert T.sigmoid(Tensor(0.0)).item() == 0.5

    def test_relu_definition(self):
        assert T.relu(Tensor(-2.5)).item() == 0.0
        assert T.relu(Tensor(3.1)).item() == 3.1

    def test_tanh_value(self):
        # direct formula: (e - 1/e) / (e + 1/e)
        e = math.e
        assert T.tanh(Tensor(1.0)).item() == pytest.approx((e - 1 / e) / (e + 1 / e), rel=1e-12)

    def test_log_domain_error_reports_index(self):
        with pytest.raises(DomainError, match=r"index \(1,\)"):
            T.apply_unary("log", Tensor([1.0, -1.0, 2.0]))

    def test_sigmoid_grad_at_zero(self):
        w = Tensor(0.0, requires_grad=True)
        with T.Tape() as tape:
            loss = T.sigmoid(w)
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, w, tape).item() == pytest.approx(0.25)

    def test_sigmoid_extreme_stable(self):
        out = T.sigmoid(Tensor([-800.0, 800.0]))
        assert np.all(np.isfinite(out.data))


class TestBinary:
    def test_add_zero(self):
        out = Tensor([1.0, 2, 3]) + Tensor([0.0, 0, 0])
        assert out.data.tolist() == [1, 2, 3]

    def test_mul_hand(self):
        out = Tensor([2.0, 3]) * Tensor([4.0, 5])
        assert out.data.tolist() == [8, 15]

    def test_bias_broadcast_hand(self):
        out = Tensor([[1.0, 2], [3, 4]]) + Tensor([10.0, 20])
        assert out.data.tolist() == [[11, 22], [13, 24]]

    def test_bias_broadcast_gradient_sums(self):
        b = Tensor([1.0, 1], requires_grad=True)
        x = Tensor([[1.0, 2], [3, 4], [5, 6]])
        with T.Tape() as tape:
            loss = T.reduce_sum(x + b)
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, b, tape).data.tolist() == [3, 3]

    def test_incompatible_shapes(self):
        with pytest.raises(ShapeError):
            Tensor([[1.0, 2]]) + Tensor([1.0, 2, 3])


class TestConcatSlice:
    def test_concat_axis1_hand(self):
        out = T.concat([Tensor([[1.0], [2]]), Tensor([[3.0], [4]])], axis=1)
        assert out.data.tolist() == [[1, 3], [2, 4]]

    def test_concat_single_identity(self):
        x = Tensor([[1.0, 2]])
        assert np.array_equal(T.concat([x], axis=0).data, x.data)

    def test_concat_channel_shape(self):
        # three L x 64 maps concatenated on the channel axis -> L x 192
        parts = [T.zeros((5, 64)) for _ in range(3)]
        assert T.concat(parts, axis=1).shape == (5, 192)

    def test_concat_empty_error(self):
        with pytest.raises(ShapeError):
            T.concat([], axis=0)

    def test_concat_mismatch_error(self):
        with pytest.raises(ShapeError):
            T.concat([T.zeros((2, 2)), T.zeros((3, 3))], axis=0)

    def test_concat_then_slice_recovers(self):
        rng = Rng(1)
        a = Tensor(rng.uniform(6).reshape(2, 3))
        b = Tensor(rng.uniform(9).reshape(3, 3))
        joined = T.concat([a, b], axis=0)
        assert np.array_equal(T.slice_axis(joined, 0, 0, 2).data, a.data)
        assert np.array_equal(T.slice_axis(joined, 0, 2, 5).data, b.data)

    def test_concat_gradient_splits(self):
        a = Tensor([[1.0, 2]], requires_grad=True)
        b = Tensor([[3.0, 4]], requires_grad=True)
        with T.Tape() as tape:
            out = T.concat([a, b], axis=0)
            loss = T.reduce_sum(out * Tensor([[1.0, 2], [3, 4]]))
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, a, tape).data.tolist() == [[1, 2]]
        assert T.grad_for(grads, b, tape).data.tolist() == [[3, 4]]


class TestPool:
    def test_max_hand(self):
        assert T.pool_over_time("max", Tensor([[1.0, 5], [3, 2]])).data.tolist() == [3, 5]

    def test_avg_hand(self):
        assert T.pool_over_time("avg", Tensor([[1.0, 5], [3, 2]])).data.tolist() == [2, 3.5]

    def test_single_step_identity(self):
        x = Tensor([[7.0, -3.0]])
        assert T.pool_over_time("max", x).data.tolist() == [7, -3]
        assert T.pool_over_time("avg", x).data.tolist() == [7, -3]

    def test_empty_error(self):
        with pytest.raises(ShapeError):
            T.pool_over_time("max", Tensor(np.zeros((0, 3))))

    def test_max_tie_routes_to_earliest(self):
        x = Tensor([[2.0], [2.0], [1.0]], requires_grad=True)
        with T.Tape() as tape:
            loss = T.reduce_sum(T.pool_over_time("max", x))
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, x, tape).data.tolist() == [[1], [0], [0]]

    def test_max_ge_avg_property(self):
        rng = Rng(4)
        x = Tensor(rng.uniform(40, -5, 5).reshape(8, 5))
        mx = T.pool_over_time("max", x).data
        av = T.pool_over_time("avg", x).data
        assert np.all(mx >= av)


class TestBce:
    def test_half_is_ln2(self):
        loss = T.bce_loss(Tensor([0.5]), Tensor([1.0]))
        assert loss.item() == pytest.approx(math.log(2.0), rel=1e-12)

    def test_direct_formula(self):
        # -ln(0.9), computed independently
        loss = T.bce_loss(Tensor([0.9]), Tensor([1.0]))
        assert loss.item() == pytest.approx(-math.log(0.9), rel=1e-12)

    def test_perfect_prediction_near_zero(self):
        loss = T.bce_loss(Tensor([0.0, 1.0]), Tensor([0.0, 1.0]))
        assert 0.0 <= loss.item() < 1e-6

    def test_nonnegative_random(self):
        rng = Rng(2)
        p = Tensor(rng.uniform(50))
        t = Tensor((rng.uniform(50) > 0.5).astype(float))
        assert T.bce_loss(p, t).item() >= 0.0

    def test_mask_selects_elements(self):
        p = Tensor([0.9, 0.5])
        t = Tensor([1.0, 1.0])
        masked = T.bce_loss(p, t, mask=Tensor([1.0, 0.0]))
        assert masked.item() == pytest.approx(-math.log(0.9), rel=1e-12)

    def test_shape_mismatch(self):
        with pytest.raises(ShapeError):
            T.bce_loss(Tensor([0.5]), Tensor([1.0, 0.0]))

    def test_mean_over_elements(self):
        loss = T.bce_loss(Tensor([0.5, 0.9]), Tensor([1.0, 1.0]))
        expect = (math.log(2.0) - math.log(0.9)) / 2.0
        assert loss.item() == pytest.approx(expect, rel=1e-12)


class TestBackward:
    def test_sum_gives_ones(self):
        w = Tensor(np.arange(6.0).reshape(2, 3), requires_grad=True)
        with T.Tape() as tape:
            loss = T.reduce_sum(w)
        grads = T.backward(loss, tape)
        assert np.array_equal(T.grad_for(grads, w, tape).data, np.ones((2, 3)))

    def test_unreached_leaf_gets_zeros(self):
        w = Tensor([1.0, 2.0], requires_grad=True)
        v = Tensor([3.0], requires_grad=True)
        with T.Tape() as tape:
            tape.register_leaf(v)
            loss = T.reduce_sum(w)
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, v, tape).data.tolist() == [0.0]

    def test_non_scalar_loss_rejected(self):
        w = Tensor([1.0, 2.0], requires_grad=True)
        with T.Tape() as tape:
            out = w * w
        with pytest.raises(TapeError):
            T.backward(out, tape)

    def test_reuse_across_tapes(self):
        w = Tensor([2.0], requires_grad=True)
        for _ in range(3):
            with T.Tape() as tape:
                loss = T.reduce_sum(w * w)
            grads = T.backward(loss, tape)
            assert T.grad_for(grads, w, tape).data.tolist() == [4.0]

    def test_nested_tapes_rejected(self):
        with T.Tape():
            with pytest.raises(TapeError):
                with T.Tape():
                    pass

    def test_no_tape_no_recording(self):
        w = Tensor([1.0], requires_grad=True)
        out = w * w
        assert out.node_id is None and not out.requires_grad

    def test_composite_matches_finite_differences(self):
        rng = Rng(77)
        w1 = Tensor(rng.uniform(12, -1, 1).reshape(3, 4), requires_grad=True)
        b1 = Tensor(rng.uniform(4, -1, 1), requires_grad=True)
        w2 = Tensor(rng.uniform(4, -1, 1).reshape(4, 1), requires_grad=True)
        x = Tensor(rng.uniform(6, -1, 1).reshape(2, 3))
        t = Tensor([[1.0], [0.0]])

        def forward():
            h = T.tanh(T.matmul(x, w1) + b1)
            return T.bce_loss(T.sigmoid(T.matmul(h, w2)), t)

        assert T.grad_check(forward, [w1, b1, w2]) <= 1e-4

    def test_linear_function_near_machine_precision(self):
        w = Tensor([1.5, -2.0, 0.5], requires_grad=True)
        c = Tensor([2.0, 3.0, 4.0])

        def forward():
            return T.reduce_sum(w * c)

        assert T.grad_check(forward, [w]) <= 1e-9

    def test_corruption_hook_breaks_gradcheck(self):
        w = Tensor([0.3, 0.4], requires_grad=True)

        def forward():
            return T.reduce_sum(T.sigmoid(w))

        T.set_backward_corruption("sigmoid", 1.5)
        try:
            err = T.grad_check(forward, [w])
        finally:
            T.clear_backward_corruption()
        assert err > 1e-4


class TestStructuralOps:
    def test_reshape_roundtrip_gradient(self):
        w = Tensor(np.arange(6.0), requires_grad=True)
        with T.Tape() as tape:
            out = T.reshape(w, (2, 3))
            loss = T.reduce_sum(out * Tensor([[1.0, 2, 3], [4, 5, 6]]))
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, w, tape).data.tolist() == [1, 2, 3, 4, 5, 6]

    def test_transpose_gradient(self):
        w = Tensor([[1.0, 2], [3, 4]], requires_grad=True)
        with T.Tape() as tape:
            loss = T.reduce_sum(T.transpose2d(w) * Tensor([[1.0, 0], [0, 0]]))
        grads = T.backward(loss, tape)
        assert T.grad_for(grads, w, tape).data.tolist() == [[1, 0], [0, 0]]


@given(st.lists(st.floats(min_value=-5, max_value=5), min_size=1, max_size=20),
       st.lists(st.floats(min_value=-5, max_value=5), min_size=1, max_size=20))
@settings(max_examples=50, deadline=None)
def test_concat_slice_roundtrip_property(xs, ys):
    a = Tensor(np.asarray(xs))
    b = Tensor(np.asarray(ys))
    joined = T.concat([a, b], axis=0)
    back_a = T.slice_axis(joined, 0, 0, len(xs))
    back_b = T.slice_axis(joined, 0, len(xs), len(xs) + len(ys))
    assert np.array_equal(back_a.data, a.data)
    assert np.array_equal(back_b.data, b.data)
