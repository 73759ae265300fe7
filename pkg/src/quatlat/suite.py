"""The full certificate suite behind `quatlat verify`.

Each entry builds everything it needs from scratch, so a green run certifies
the whole chain: exact arithmetic, the splittings, the structure and its
complex, the local permutation groups, the presentations and the invariants.
"""

from __future__ import annotations

import time

from .certify import (
    CertificateResult,
    ball_certificate,
    discriminant_certificate,
    neighbors_certificate,
    ramification_certificate,
    stabilizer_certificate,
)
from .invariants import albanese_certificate, chern_numbers, complex_counts
from .lattice import generator_images, standard_complex, standard_structure
from .localperm import local_group, reference_group
from .presentations import (
    abelianization,
    evaluate_word,
    fixed_presentations,
    is_projectively_trivial,
    lambda_presentation,
    orbifold_presentation,
    reidemeister_schreier,
    same_presentation,
    v4_quotient_of_lambda,
)
from .squares import euler_characteristic, is_complete_bipartite, is_inverse_stable, link, verify_v4


def _timed(name: str, fn) -> CertificateResult:
    start = time.perf_counter()
    passed, details = fn()
    return CertificateResult(name, passed, details, (time.perf_counter() - start) * 1000)


def structure_certificate() -> CertificateResult:
    def run():
        structure = standard_structure()
        verdict = verify_v4(structure.a_names, structure.b_names, structure.elements, structure.ops)
        stable = is_inverse_stable(structure)
        counts_ok = len(structure.squares) == 9
        return verdict.ok and stable and counts_ok, {
            "verified": verdict.ok,
            "assumed": list(verdict.assumed),
            "squares": len(structure.squares),
            "inverse_stable": stable,
        }

    return _timed("v4-structure", run)


def links_certificate() -> CertificateResult:
    def run():
        complex_ = standard_complex()
        structure = complex_.structure
        counts = complex_.counts()
        all_links = {
            v: is_complete_bipartite(link(complex_, v), structure.a_names, structure.b_names)
            for v in complex_.vertices
        }
        chi = euler_characteristic(complex_)
        ok = counts == (4, 12, 9) and all(all_links.values()) and chi == 1
        return ok, {"counts": list(counts), "links_complete": all_links, "chi": chi}

    return _timed("links", run)


def local_groups_certificate() -> CertificateResult:
    def run():
        structure = standard_structure()
        pa0 = local_group(structure, "A", 0)
        pa1 = local_group(structure, "A", 1)
        pb0 = local_group(structure, "B", 0)
        pb1 = local_group(structure, "B", 1)
        ref_a = reference_group(structure.a_names, structure.inv)
        ref_b = reference_group(structure.b_names, structure.inv)
        ok = (
            pa0 == pa1 == ref_a
            and pb0 == pb1 == ref_b
            and pa0.order() == 12
            and pb0.order() == 12
        )
        return ok, {
            "order_a": pa0.order(),
            "order_b": pb0.order(),
            "a_equal_reference": pa0 == ref_a,
            "b_equal_reference": pb0 == ref_b,
        }

    return _timed("local-permutation-groups", run)


def relators_certificate() -> CertificateResult:
    def run():
        images = generator_images()
        failures = []
        for label, pres in fixed_presentations().items():
            for rel in pres.relators:
                value = evaluate_word(rel, images, pres)
                if not is_projectively_trivial(value):
                    failures.append(f"{label}: {pres.word_str(rel)}")
        generated = orbifold_presentation(standard_structure())
        matches = same_presentation(generated, lambda_presentation())
        if not matches:
            failures.append("orbifold presentation differs from the fixed one")
        return not failures, {"failures": failures, "orbifold_matches": matches}

    return _timed("relators", run)


def abelianization_certificate() -> CertificateResult:
    def run():
        gamma_factors, gamma_rank = abelianization(fixed_presentations()["gamma"])
        kernel = reidemeister_schreier(lambda_presentation(), v4_quotient_of_lambda())
        kernel_factors, kernel_rank = abelianization(kernel)
        ok = gamma_factors == [15] and gamma_rank == 0 and kernel_factors == [15] and kernel_rank == 0
        return ok, {
            "gamma": {"factors": gamma_factors, "free_rank": gamma_rank},
            "rs_kernel": {"factors": kernel_factors, "free_rank": kernel_rank},
        }

    return _timed("abelianization", run)


def albanese_suite_certificate() -> CertificateResult:
    def run():
        report = albanese_certificate(standard_structure())
        return report.passed, report.as_json()

    return _timed("albanese", run)


def invariants_certificate() -> CertificateResult:
    def run():
        counts = complex_counts(4, 2)
        c1_sq, c2 = chern_numbers(4, 2)
        ok = (counts.edges, counts.squares, counts.chi) == (12, 9, 1) and (c1_sq, c2) == (8, 4)
        return ok, {
            "edges": counts.edges,
            "squares": counts.squares,
            "chi": counts.chi,
            "c1_squared": c1_sq,
            "c2": c2,
        }

    return _timed("invariants", run)


def run_all(radius: int = 3) -> list[CertificateResult]:
    return [
        ramification_certificate(),
        discriminant_certificate(),
        structure_certificate(),
        links_certificate(),
        local_groups_certificate(),
        stabilizer_certificate(),
        neighbors_certificate(),
        relators_certificate(),
        abelianization_certificate(),
        ball_certificate(radius),
        invariants_certificate(),
        albanese_suite_certificate(),
    ]
