"""JSON-ready dictionaries for the result types, and their inverses.

Complex numbers are ``[re, im]`` pairs; vectors and matrices are nested
lists of pairs. Floats are emitted with ``repr`` precision, so a dump and
reload reproduces every value bit for bit.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .canonical import CanonicalForm, ErasingDirection
from .classify import Classification
from .decompositions import ProductBiseparableForm, Set2Form, TwoProductDecomposition
from .invariants import InvariantSet
from .linalg import ProjectiveRoot
from .states import ThreeQubitState, from_amplitudes


def enc_complex(z) -> list[float]:
    z = complex(z)
    return [float(z.real), float(z.imag)]


def dec_complex(pair) -> complex:
    re, im = pair
    return complex(float(re), float(im))


def enc_array(a) -> list:
    a = np.asarray(a)
    if a.ndim == 0:
        return enc_complex(a)
    return [enc_array(x) for x in a]


def dec_array(data) -> np.ndarray:
    def walk(x):
        if len(x) == 2 and all(isinstance(v, (int, float)) for v in x):
            return dec_complex(x)
        return [walk(v) for v in x]

    return np.array(walk(data), dtype=np.complex128)


def _floats(xs) -> list[float]:
    return [float(x) for x in xs]


# state files ---------------------------------------------------------------

def state_to_dict(state: ThreeQubitState) -> dict:
    out = {"amplitudes": enc_array(state.amplitudes)}
    if state.label is not None:
        out["label"] = state.label
    return out


def state_from_dict(data, normalize: bool = False) -> ThreeQubitState:
    """Parse a state file object.

    Shape problems raise ``ValueError``; a wrong norm raises
    ``NotNormalized`` (itself a ``ValueError``, so check it first).
    """
    if not isinstance(data, dict) or "amplitudes" not in data:
        raise ValueError("state file must be an object with an 'amplitudes' key")
    amps = data["amplitudes"]
    if not isinstance(amps, list) or len(amps) != 8:
        raise ValueError("'amplitudes' must hold exactly 8 [re, im] pairs")
    vals = []
    for pair in amps:
        if (not isinstance(pair, list) or len(pair) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in pair)
                or not all(math.isfinite(v) for v in pair)):
            raise ValueError(f"bad amplitude entry {pair!r}")
        vals.append(dec_complex(pair))
    label = data.get("label")
    if label is not None and not isinstance(label, str):
        raise ValueError("'label' must be a string")
    return from_amplitudes(vals, normalize=normalize, label=label)


# result types ----------------------------------------------------------------

def root_to_dict(r: ProjectiveRoot) -> dict:
    return {"u0": enc_complex(r.u0), "u1": enc_complex(r.u1), "multiplicity": r.multiplicity}


def root_from_dict(d) -> ProjectiveRoot:
    return ProjectiveRoot(dec_complex(d["u0"]), dec_complex(d["u1"]), d["multiplicity"])


def canonical_to_dict(cf: CanonicalForm) -> dict:
    return {
        "kind": "canonical_form",
        "lambda": _floats(cf.lambdas),
        "mu": _floats(cf.mu),
        "phi": float(cf.phi),
        "omega": float(cf.omega),
        "uA": enc_array(cf.uA),
        "uB": enc_array(cf.uB),
        "uC": enc_array(cf.uC),
        "root": root_to_dict(cf.root),
        "root_count": cf.root_count,
        "root_choice": cf.root_choice,
    }


def canonical_from_dict(d) -> CanonicalForm:
    return CanonicalForm(
        lambdas=np.array(d["lambda"], dtype=float),
        phi=float(d["phi"]),
        uA=dec_array(d["uA"]),
        uB=dec_array(d["uB"]),
        uC=dec_array(d["uC"]),
        omega=float(d["omega"]),
        root=root_from_dict(d["root"]),
        root_count=d["root_count"],
        root_choice=d["root_choice"],
    )


def invariants_to_dict(inv: InvariantSet) -> dict:
    out = {"kind": "invariants"}
    for name, val in inv.as_dict().items():
        if val is None:
            out[name] = None
        elif name == "hdet":
            out[name] = enc_complex(val)
        else:
            out[name] = float(val)
    return out


def invariants_from_dict(d) -> InvariantSet:
    kw = {k: v for k, v in d.items() if k != "kind"}
    if kw.get("hdet") is not None:
        kw["hdet"] = dec_complex(kw["hdet"])
    return InvariantSet(**kw)


def classification_to_dict(c: Classification) -> dict:
    return {
        "kind": "classification",
        "type": c.type_label,
        "matched_mu_pattern": c.matched_mu_pattern,
        "j_signature": list(c.j_signature),
        "tol": float(c.tol),
        "boundary": bool(c.boundary),
        "identity_residuals": {k: float(v) for k, v in c.identity_residuals.items()},
    }


def classification_from_dict(d) -> Classification:
    return Classification(d["type"], d["matched_mu_pattern"], list(d["j_signature"]),
                          d["tol"], d["boundary"], dict(d["identity_residuals"]))


def erasing_to_dict(e: ErasingDirection) -> dict:
    return {
        "party": e.party,
        "ket": enc_array(e.ket),
        "residual": enc_array(e.residual),
        "probability": float(e.probability),
        "degenerate": bool(e.degenerate),
        "multiplicity": e.multiplicity,
        "residual_det": enc_complex(e.residual_det),
    }


def erasing_from_dict(d) -> ErasingDirection:
    return ErasingDirection(d["party"], dec_array(d["ket"]), dec_array(d["residual"]),
                            d["probability"], d["degenerate"], d["multiplicity"])


def two_product_to_dict(t: TwoProductDecomposition) -> dict:
    return {
        "kind": "two_product",
        "alpha": float(t.alpha),
        "beta": float(t.beta),
        "ket1": [enc_array(k) for k in t.ket1],
        "ket2": [enc_array(k) for k in t.ket2],
        "trivial": bool(t.trivial),
    }


def two_product_from_dict(d) -> TwoProductDecomposition:
    return TwoProductDecomposition(
        d["alpha"], d["beta"],
        tuple(dec_array(k) for k in d["ket1"]),
        tuple(dec_array(k) for k in d["ket2"]),
        d["trivial"],
    )


_PB_VECTORS = ("a0", "a1", "b0", "c0", "b0p", "b1p", "c0pp", "c1pp")


def biseparable_to_dict(p: ProductBiseparableForm) -> dict:
    out = {
        "kind": "product_plus_biseparable",
        "theta": float(p.theta),
        "omega": float(p.omega_angle),
        "global_phase": float(p.global_phase),
    }
    for name in _PB_VECTORS:
        out[name] = enc_array(getattr(p, name))
    return out


def biseparable_from_dict(d) -> ProductBiseparableForm:
    return ProductBiseparableForm(
        theta=d["theta"], omega_angle=d["omega"], global_phase=d["global_phase"],
        **{name: dec_array(d[name]) for name in _PB_VECTORS},
    )


def set2_to_dict(s: Set2Form) -> dict:
    return {
        "kind": "set2",
        "support": ["000", "001", "100", "110", "111"],
        "coefficients": enc_array(s.coefficients),
        "uC": enc_array(s.uC),
        "rotated": bool(s.rotated),
        "off_support": float(s.off_support),
    }


def set2_from_dict(d) -> Set2Form:
    return Set2Form(dec_array(d["coefficients"]), dec_array(d["uC"]), d["rotated"],
                    d["off_support"])


def dumps(obj) -> str:
    """One line of JSON, keys in insertion order."""
    return json.dumps(obj, allow_nan=False, separators=(", ", ": "))


__all__ = [
    "dumps",
    "state_to_dict",
    "state_from_dict",
    "canonical_to_dict",
    "canonical_from_dict",
    "invariants_to_dict",
    "invariants_from_dict",
    "classification_to_dict",
    "classification_from_dict",
    "erasing_to_dict",
    "erasing_from_dict",
    "two_product_to_dict",
    "two_product_from_dict",
    "biseparable_to_dict",
    "biseparable_from_dict",
    "set2_to_dict",
    "set2_from_dict",
]
