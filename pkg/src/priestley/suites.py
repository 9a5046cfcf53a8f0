"""Check suites behind the command line: finite duality / Hofmann-Mislove checks and the fixture suite.

Each check is a dict ``{"name", "status", "detail"}`` plus ``"witness"``
on failure. Everything is built from sorted masks and labels so reports
are byte-stable across runs.
"""

from __future__ import annotations

import random

from . import symbolic as sym
from ._bits import members, popcount
from .duality import (
    ClosedUpset,
    closed_upsets,
    corollary59_check,
    dual_space,
    filters_vs_closed_upsets,
    hm_finite_iso,
    is_s_upset,
    lemma47_all,
    lemma51_predicates,
    reconstruct,
    sigma_embedding_violation,
    spatial_via_density,
    structural_validators,
)
from .errors import IsoFailure
from .lattice import (
    SCOTT_BOUND,
    check_distributive,
    enumerate_filters,
    is_compact_element,
)
from .topspace import (
    compact_saturated,
    hofmann_mislove,
    open_frame,
    points_homeomorphism,
    sobriety_violation,
    spectral_from_priestley,
)

SUITES = ("dual", "hm", "all")


def quantifier(L, scott_bound=SCOTT_BOUND):
    """Literal subset quantification up to ``scott_bound`` elements, the downset reduction above."""
    return "all" if L.n <= scott_bound else "downsets"


def _check(name, fn):
    """Run ``fn`` returning ``(ok, detail, witness)``; library errors become failures."""
    try:
        ok, detail, witness = fn()
    except IsoFailure as exc:
        ok, detail, witness = False, {}, {"error": type(exc).__name__, "message": str(exc)}
    out = {"name": name, "status": "pass" if ok else "fail", "detail": detail}
    if not ok:
        out["witness"] = witness
    return out


def _labels(L, m):
    return [L.labels[a] for a in members(m)]


def lattice_checks(L, suite, scott_bound=SCOTT_BOUND):
    """Checks on a finite lattice; the distributivity check gates the rest."""
    checks = []
    bad = check_distributive(L)
    checks.append({
        "name": "distributive",
        "status": "pass" if bad is None else "fail",
        "detail": {"elements": L.n},
        **({"witness": {"a": L.labels[bad[0]], "b": L.labels[bad[1]], "c": L.labels[bad[2]],
                        "law": "a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c)"}} if bad else {}),
    })
    if bad is not None:
        return checks, {}
    X = dual_space(L)
    mode = quantifier(L, scott_bound)
    summary = {
        "elements": L.n,
        "filters": len(enumerate_filters(L)),
        "points": X.n,
        "quantifier": mode,
    }
    if suite in ("dual", "all"):
        checks += _dual_checks(L, X, mode)
    if suite in ("hm", "all"):
        checks += _hm_lattice_checks(L, X, mode)
    return checks, summary


def _dual_checks(L, X, mode):
    def round_trip():
        rep = reconstruct(X)
        return True, {"clopen_upsets": rep.lattice.n}, None

    def embedding():
        bad = sigma_embedding_violation(X)
        if bad is None:
            return True, {}, None
        a, b, law = bad
        return False, {}, {"a": L.labels[a], "b": L.labels[b], "law": law}

    def filt_clup():
        bij = filters_vs_closed_upsets(X)
        return True, {"filters": len(bij.source), "closed_upsets": len(bij.target)}, None

    def validators():
        res = structural_validators(X)
        failed = {k: v for k, v in sorted(res.items()) if v is not None}
        return not failed, {"checked": sorted(res)}, failed

    def cornish():
        space = spectral_from_priestley(X)
        return True, {"opens": len(space.opens), "compact_saturated": len(closed_upsets(X))}, None

    def lemma47():
        if L.n > SCOTT_BOUND:
            return True, {"skipped": f"more than {SCOTT_BOUND} elements"}, None
        bad = lemma47_all(X)
        return bad is None, {"subsets": 1 << L.n}, {"subset": _labels(L, bad or 0)}

    return [
        _check("priestley_round_trip", round_trip),
        _check("sigma_embedding", embedding),
        _check("filters_vs_closed_upsets", filt_clup),
        _check("structural_validators", validators),
        _check("cornish_correspondence", cornish),
        _check("closure_of_sigma_union", lemma47),
    ]


def _hm_lattice_checks(L, X, mode):
    def coherence():
        for F in enumerate_filters(L):
            p = lemma51_predicates(X, F, mode)
            if not p.coherent:
                return False, {}, {"filter": _labels(L, F.members), "predicates": list(p)}
        return True, {"filters": len(enumerate_filters(L)), "quantifier": mode}, None

    def hm_iso():
        rep = hm_finite_iso(X, mode)
        return True, {"ofilt": len(rep.ofilt_to_sup), "sup": len(rep.sup_to_ksat),
                      "ksat": len(rep.composite.target), "y_points": len(rep.y_points)}, None

    def cor59():
        rows = corollary59_check(X, mode)
        bad = [r for r in rows if not r.ok]
        if bad:
            r = bad[0]
            return False, {}, {"filter": _labels(L, r.filter), "completely_prime": r.completely_prime,
                               "singleton_min": r.singleton_min}
        return True, {"scott_open_filters": len(rows),
                      "points": sum(r.completely_prime for r in rows)}, None

    def compact_elements():
        compact = []
        for a in range(L.n):
            lit = is_compact_element(L, a, mode)
            spec = is_s_upset(X, ClosedUpset(X, X.sigma[a]))
            if lit != spec:
                return False, {}, {"element": L.labels[a], "literal": lit, "sigma_s_upset": spec}
            compact.append(lit)
        return True, {"compact": sum(compact)}, None

    def frame_compact():
        top = is_compact_element(L, L.top, mode)
        mins = popcount(X.minimal(X.full) & ~X.Y) == 0
        return top == mins, {"compact": top}, {"top_compact": top, "min_X_in_Y": mins}

    def spatial():
        return spatial_via_density(X), {}, {"reason": "Y is not dense"}

    return [
        _check("scott_open_conditions_agree", coherence),
        _check("hofmann_mislove_finite", hm_iso),
        _check("points_vs_singleton_min", cor59),
        _check("compact_elements", compact_elements),
        _check("frame_compact", frame_compact),
        _check("spatial", spatial),
    ]


def space_checks(S, suite, scott_bound=SCOTT_BOUND):
    """Hofmann-Mislove checks on a finite space, then the lattice checks on its open frame."""
    checks = []
    bad = sobriety_violation(S)
    checks.append({
        "name": "sober",
        "status": "pass" if bad is None else "fail",
        "detail": {"points": S.n, "opens": len(S.opens)},
        **({"witness": {"irreducible_closed": [S.labels[x] for x in members(bad)]}} if bad is not None else {}),
    })
    summary = {"points": S.n, "opens": len(S.opens)}
    if suite in ("hm", "all") and bad is None:
        def hm():
            bij = hofmann_mislove(S, quantifier(open_frame(S), scott_bound))
            return True, {"ofilt": len(bij.source), "ksat": len(bij.target)}, None

        def homeo():
            points_homeomorphism(S)
            return True, {"points": S.n}, None

        checks += [_check("hofmann_mislove", hm), _check("points_homeomorphism", homeo)]
    L = open_frame(S)
    more, sub = lattice_checks(L, suite, scott_bound)
    checks += [{**c, "name": "frame." + c["name"]} for c in more]
    summary["frame"] = sub
    return checks, summary


def poset_checks(P, S, suite, scott_bound=SCOTT_BOUND):
    """Downset lattice and Alexandrov space of a poset."""
    from .lattice import downset_lattice

    L = downset_lattice(P)
    checks, summary = lattice_checks(L, suite, scott_bound)
    if suite in ("hm", "all"):
        more, sub = space_checks(S, "hm", scott_bound)
        checks += [{**c, "name": "alexandrov." + c["name"]} for c in more
                   if not c["name"].startswith("frame.")]
        summary["alexandrov"] = {k: v for k, v in sub.items() if k != "frame"}
    return checks, summary


def ksat_sets(S):
    """Compact saturated subsets of ``S`` as sorted label lists."""
    return [[S.labels[x] for x in members(k)] for k in compact_saturated(S)]


# -- fixtures ------------------------------------------------------------------

EXPECTED = {
    sym.CHAIN: {"frame_compact": False, "top_compact": False, "non_points": 1},
    sym.COFINITE: {"frame_compact": True, "top_compact": True, "non_points": 0},
}


def fixture_checks(frame, rng, chain_bound=60, sample=sym.SAMPLE_BOUND):
    """The invariant suite of one symbolic frame.

    ``rng`` drives the extra random descriptors for the round-trip and
    order checks; ``chain_bound`` is how far the per-index sweeps go.
    """
    enc = sym.to_json
    f = frame
    elems = f.sample_elements(12)
    fams = f.builtin_families()
    checks = []

    def order_laws():
        for a in elems:
            for b in elems:
                m, j = f.meet(a, b), f.join(a, b)
                if f.leq(a, b) and f.leq(b, a) and a != b:
                    return False, {}, {"antisymmetry": [enc(a), enc(b)]}
                lower = [c for c in elems if f.leq(c, a) and f.leq(c, b)]
                upper = [c for c in elems if f.leq(a, c) and f.leq(b, c)]
                if m not in elems or not all(f.leq(c, m) for c in lower) or not (f.leq(m, a) and f.leq(m, b)):
                    return False, {}, {"meet": [enc(a), enc(b)]}
                if j not in elems or not all(f.leq(j, c) for c in upper) or not (f.leq(a, j) and f.leq(b, j)):
                    return False, {}, {"join": [enc(a), enc(b)]}
        return True, {"elements": len(elems)}, None

    def closed_forms():
        for fam in fams:
            sym.cross_check_family(f, fam, sample=sample)
        return True, {"families": len(fams), "sample": sample}, None

    def distributivity():
        for a in elems:
            for fam in fams:
                if not sym.frame_law_check(f, a, fam):
                    return False, {}, {"element": enc(a), "family": enc(fam)}
        return True, {"pairs": len(elems) * len(fams)}, None

    def points():
        schema = sym.points_of(f, chain_bound)
        return True, {"schema": schema.description, "sampled": len(schema.points),
                      "non_points": [enc(q) for q in schema.non_points]}, None

    def spectrum_order():
        prim = f.sample_primes(8) + f.non_point_primes()
        prim = list(dict.fromkeys(prim))
        for p in prim:
            for q in prim:
                probe = f.sample_elements(p, q)
                derived = all(f.point_contains(q, a) for a in probe if f.point_contains(p, a))
                if derived != f.point_leq(p, q):
                    return False, {}, {"p": enc(p), "q": enc(q), "derived": derived}
        return True, {"primes": len(prim)}, None

    def scott():
        out = {}
        for F in f.sample_filters():
            v = sym.classify_scott_open(f, F)
            if not v:
                test = sym.refute_scott_open(f, F, v.witness, sample=sample)
                if not test.counterexample:
                    return False, {}, {"filter": enc(F), "witness": enc(v.witness)}
            out[repr(f.canonical_filter(F))] = v.value
        closed = [k for k, v in out.items() if not v]
        return True, {"filters": len(out), "not_scott_open": closed}, None

    def compact():
        top = sym.is_compact_element_sym(f, f.top)
        whole = sym.frame_compact(f)
        want = EXPECTED[f.fixture_id]
        ok = top.value == want["top_compact"] and whole == want["frame_compact"]
        det = {"top_compact": top.value, "frame_compact": whole}
        if top.witness is not None:
            det["witness"] = enc(top.witness)
        return ok, det, det

    def round_trip():
        classes = [F for F in f.sample_filters() if sym.min_k_in_y(f, F)]
        classes += _random_filters(f, rng, 20)
        for F in classes:
            F = f.canonical_filter(F)
            Q = sym.hm_map(f, F)
            if f.canonical_filter(sym.hm_inv(f, Q)) != F or sym.hm_map(f, sym.hm_inv(f, Q)) != Q:
                return False, {}, {"filter": enc(F), "image": enc(Q)}
            # Q is the set of sampled points above F
            for p in f.sample_primes(12):
                if f.in_y(p) and f.set_contains(Q, p) != f.filter_leq(F, f.point_filter(p)):
                    return False, {}, {"filter": enc(F), "point": enc(p)}
        for F in classes:
            for G in classes:
                a, b = f.canonical_filter(F), f.canonical_filter(G)
                if f.filter_leq(a, b) != f.set_leq(sym.hm_map(f, b), sym.hm_map(f, a)):
                    return False, {}, {"order": [enc(a), enc(b)]}
        return True, {"classes": len(classes)}, None

    def filter_inclusion():
        fl = [f.canonical_filter(F) for F in f.sample_filters()] + _random_filters(f, rng, 10)
        for F in fl:
            for G in fl:
                probe = f.sample_elements(F, G)
                derived = all(f.filter_member(G, a) for a in probe if f.filter_member(F, a))
                if derived != f.filter_leq(F, G):
                    return False, {}, {"F": enc(F), "G": enc(G)}
        return True, {"filters": len(fl)}, None

    def cor59():
        rows = sym.corollary59_sym(f)
        bad = [r for r in rows if not r.ok]
        if bad:
            return False, {}, {"filter": enc(bad[0].filter)}
        return True, {"rows": len(rows), "points": sum(r.completely_prime for r in rows)}, None

    for name, fn in [
        ("order_laws", order_laws), ("family_closed_forms", closed_forms),
        ("frame_distributivity", distributivity), ("points", points),
        ("spectrum_order", spectrum_order), ("filter_inclusion", filter_inclusion),
        ("classify_scott_open", scott), ("compactness", compact),
        ("hm_round_trip", round_trip), ("points_vs_singleton_min", cor59),
    ]:
        checks.append(_check(name, fn))
    return checks


def _random_filters(f, rng, count):
    out = []
    for _ in range(count):
        if isinstance(f, sym.ChainOmegaPlusOne):
            out.append(sym.Principal(sym.Nat(rng.randrange(1, 1001))))
        else:
            pick = rng.randrange(3)
            if pick == 0:
                out.append(sym.ContainsAll(frozenset(rng.sample(range(40), rng.randrange(1, 6)))))
            elif pick == 1:
                out.append(sym.Principal(sym.Missing(frozenset(rng.sample(range(40), rng.randrange(0, 4))))))
            else:
                out.append(sym.AllNonzero())
    return [f.canonical_filter(F) for F in out]


def run_fixtures(seed=0):
    """The fixture suite for both symbolic frames, as a report dict."""
    rng = random.Random(seed)
    fixtures = []
    for fid in (sym.CHAIN, sym.COFINITE):
        checks = fixture_checks(sym.FRAMES[fid], rng)
        fixtures.append({"fixture": fid, "checks": checks})
    all_checks = [c for fx in fixtures for c in fx["checks"]]
    return finish_report({"command": "fixtures", "seed": seed, "fixtures": fixtures}, all_checks)


def finish_report(report, checks):
    """Add status and counts; the report passes when every check does."""
    failed = sum(c["status"] == "fail" for c in checks)
    report["status"] = "fail" if failed else "pass"
    report["counts"] = {"checks": len(checks), "passed": len(checks) - failed, "failed": failed}
    return {"schemaVersion": 1, **report}

