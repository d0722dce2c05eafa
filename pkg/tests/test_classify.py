import math

import numpy as np
import pytest

from threequbit import (
    apply_local,
    basis_state,
    canonical_form,
    classify,
    classify_state,
    ghz,
    haar_random,
    verify_type_identities,
    w_state,
)
from threequbit.canonical import CanonicalForm
from threequbit.classify import TYPE_LABELS, type_identities

from helpers import TYPE_PATTERNS, canonical_params, random_local_unitaries, typed_state


def amps(pairs):
    v = np.zeros(8, dtype=complex)
    for idx, a in pairs:
        v[idx] = a
    return v


class TestNamed:
    def test_product(self):
        assert classify_state(basis_state("000")).type_label == "1"
        assert classify_state(basis_state("110")).type_label == "1"

    def test_ghz_family(self):
        assert classify_state(ghz()).type_label == "2b"
        s = amps([(0, math.cos(0.3)), (7, math.sin(0.3))])
        assert classify_state(s).type_label == "2b"

    def test_w(self):
        c = classify_state(w_state())
        assert c.type_label == "3a"
        assert max(c.identity_residuals.values()) < 1e-12
        assert any("sqrt(J1J2J3)" in x for x in c.j_signature)

    @pytest.mark.parametrize("pair,label", [((0, 6), "2a-C"), ((0, 5), "2a-B"), ((0, 3), "2a-A")])
    def test_bipartite_products(self, pair, label):
        s = amps([(pair[0], math.cos(0.3)), (pair[1], math.sin(0.3))])
        c = classify_state(s)
        assert c.type_label == label
        assert c.tol == 1e-8

    def test_random_is_generic(self):
        assert classify_state(haar_random(0)).type_label == "generic"


class TestVerifyIdentities:
    def test_w_residual(self):
        rep = verify_type_identities(canonical_form(w_state()), "3a")
        assert rep["max_residual"] < 1e-12

    def test_ghz_residual(self):
        rep = verify_type_identities(canonical_form(ghz()), "2b")
        assert rep["max_residual"] < 1e-12

    def test_random_generic_claim_fails(self):
        big = [verify_type_identities(canonical_form(haar_random(s)), "4c")["max_residual"]
               for s in range(20)]
        assert np.median(big) > 1e-4

    def test_unknown_label(self):
        with pytest.raises(ValueError):
            type_identities(canonical_form(ghz()), "7")


@pytest.mark.parametrize("label", list(TYPE_PATTERNS))
def test_parameterization_recovers_type(label):
    for seed in range(30):
        c = classify_state(typed_state(label, seed))
        assert c.type_label == label, (seed, c)


@pytest.mark.parametrize("label", ["3a", "3b", "4a", "4b", "4c", "5"])
def test_identities_hold_on_own_type(label):
    for seed in range(20):
        lam, phi = canonical_params(label, seed)
        cf = CanonicalForm(lam, phi, np.eye(2), np.eye(2), np.eye(2), 0.0, None, 1)
        assert verify_type_identities(cf, label)["max_residual"] < 1e-12


def test_precedence_consistency():
    # 3a nests into 4a, so 3a states satisfy the 4a identity as well
    for seed in range(20):
        lam, phi = canonical_params("3a", seed)
        cf = CanonicalForm(lam, phi, np.eye(2), np.eye(2), np.eye(2), 0.0, None, 1)
        assert verify_type_identities(cf, "4a")["max_residual"] < 1e-12


def test_lu_invariance():
    for label in TYPE_PATTERNS:
        for seed in range(10):
            s = typed_state(label, seed)
            base = classify_state(s)
            moved = classify_state(apply_local(s, *random_local_unitaries(900 + seed), 2.0))
            if base.boundary or moved.boundary:
                continue
            assert base.type_label == moved.type_label


def test_boundary_flag():
    lam = np.sqrt(np.array([0.5, 0.0, 0.25, 0.25 - 5e-8, 5e-8]))
    cf = CanonicalForm(lam, 0.4, np.eye(2), np.eye(2), np.eye(2), 0.0, None, 1)
    assert classify(cf).boundary
    assert not classify_state(haar_random(1)).boundary


def test_labels_are_known():
    for s in range(50):
        assert classify_state(haar_random(s)).type_label in TYPE_LABELS
