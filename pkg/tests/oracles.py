"""Independent helpers shared by the tests."""

from braidpbw.linalg import Eliminator


def kappa_vector(kappa) -> dict:
    """Coordinates of a constant kappa over (label, Hopf basis key)."""
    out = {}
    for label in kappa.pres.labels:
        for key, c in kappa.kc(label).terms.items():
            if c:
                out[(label, key)] = c
    return out


def same_span(kappas_a, kappas_b) -> bool:
    va = [kappa_vector(k) for k in kappas_a]
    vb = [kappa_vector(k) for k in kappas_b]
    # one numbering of keys for both sides, then compare ranks
    keys = {}
    for v in va + vb:
        for k in v:
            keys.setdefault(k, len(keys))

    def rank_fixed(vectors):
        e = Eliminator()
        for v in vectors:
            e.insert({keys[k]: c for k, c in v.items()})
        return e.rank

    ra, rb, rab = rank_fixed(va), rank_fixed(vb), rank_fixed(va + vb)
    return ra == rb == rab


# acceptance criterion number -> result line, printed in the terminal summary
ACCEPTANCE: dict = {}
