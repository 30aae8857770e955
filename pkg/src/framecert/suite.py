"""The verification suite run by the command-line tool.

Each claim is evaluated independently; an exception inside a claim turns that
record into a failure carrying the error text instead of aborting the run.
"""
from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Callable, Optional

from . import __version__, certify, codes, designs, frame, gf2
from .gf2 import Gf2Matrix, Gf2Vector
from .report import CertificateReport, ClaimRecord

MIYAMOTO_PAIRS = 10_000

GROUPS = (
    "code-d", "frame-axioms", "min-weight", "span", "span-shortened", "steiner",
    "hamming-ident", "generation", "fusion", "conformal", "griess",
)


@dataclass
class RunConfig:
    matrix: Optional[Gf2Matrix] = None
    matrix_source: str = "bundled"
    fixed_coord: int = 0
    seed: int = 0xB5
    samples: int = 1000
    fmt: str = "text"
    steiner_n: Optional[int] = None


class Suite:
    def __init__(self, config: RunConfig):
        self.config = config
        self.report = CertificateReport(metadata={
            "artifact_version": __version__,
            "matrix": config.matrix_source,
            "fixed_coord": config.fixed_coord,
            "seed": config.seed,
            "samples": config.samples,
            "miyamoto_pairs": MIYAMOTO_PAIRS,
        })

    # shared objects, built on first use
    @cached_property
    def matrix(self) -> Gf2Matrix:
        return self.config.matrix if self.config.matrix is not None else codes.moonshine_frame_matrix()

    @cached_property
    def D(self):
        return codes.from_generators(self.matrix)

    @cached_property
    def C(self):
        return codes.dual(self.D)

    @cached_property
    def pair(self):
        return frame.FrameCodePair(self.D.n, self.C, self.D)

    @cached_property
    def partition(self):
        return certify.BlockPartition.from_generator_rows(self.matrix)

    @cached_property
    def ctx(self):
        return certify.SteinerContext(self.C, self.partition)

    @cached_property
    def C_short(self):
        return codes.shorten(self.C, self.config.fixed_coord)

    @cached_property
    def D_short(self):
        return codes.shorten(self.D, self.config.fixed_coord)

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.config.seed}:{salt}")

    def claim(self, cid: str, description: str, anchor: str, fn: Callable[[], tuple[bool, dict]]) -> None:
        start = time.perf_counter()
        try:
            ok, witness = fn()
        except Exception as exc:  # noqa: BLE001 - a failing claim must not abort the report
            ok, witness = False, {"error": f"{type(exc).__name__}: {exc}"}
        elapsed = int((time.perf_counter() - start) * 1000)
        self.report.add(ClaimRecord(cid, description, anchor, "pass" if ok else "fail", witness, elapsed))

    def run(self, groups) -> CertificateReport:
        for g in groups:
            getattr(self, "group_" + g.replace("-", "_"))()
        return self.report

    # ---- groups -------------------------------------------------------

    def group_code_d(self):
        expected = {0: 1, 16: 3, 24: 120, 32: 3, 48: 1}

        def distribution():
            words = codes.enumerate_codewords(self.D)
            dist = codes.WeightDistribution.from_weights(self.D.n, (w.weight for w in words))
            got = dist.nonzero()
            return got == expected and len(words) == 128, {
                "codewords": len(words), "distribution": {str(w): a for w, a in got.items()}}

        def rank():
            r = gf2.rank(self.matrix)
            return r == 7, {"rank": r, "rows": self.matrix.nrows}

        def self_orthogonal():
            rows = self.matrix.rows
            bad = [[i, j] for i in range(len(rows)) for j in range(i, len(rows)) if gf2.dot(rows[i], rows[j])]
            return not bad, {"nonzero_inner_products": bad}

        self.claim("code_d.distribution", "D has weight distribution {0:1, 16:3, 24:120, 32:3, 48:1}",
                   "generator matrix of D", distribution)
        self.claim("code_d.rank", "the generator matrix of D has rank 7", "generator matrix of D", rank)
        self.claim("code_d.self_orthogonal", "all pairwise generator inner products vanish",
                   "D is contained in the dual of C", self_orthogonal)

    def group_frame_axioms(self):
        def run(pair):
            checks = frame.check_frame_axioms(pair)
            return all(c.passed for c in checks), {c.name: {"pass": c.passed, **c.witness} for c in checks}

        self.claim("frame_axioms.full", "(C, D): D in C-perp, C even, D weights divisible by 8",
                   "frame code axioms", lambda: run(self.pair))
        self.claim("frame_axioms.shortened",
                   f"(C', D') shortened at coordinate {self.config.fixed_coord}: frame axioms hold",
                   "frame code axioms for the shorter pair",
                   lambda: run(frame.derive_shorter_pair(self.pair, self.config.fixed_coord)))

    def group_min_weight(self):
        def run():
            dist_d = codes._direct_distribution(self.D)
            dist_c = codes.macwilliams_transform(dist_d, self.D.k)
            scanned = [gf2.from_support(s) for s in combinations(range(self.C.n), 4)
                       if codes.contains(self.C, Gf2Vector.from_support(self.C.n, s))]
            fast = [w.bits for w in codes.words_of_weight(self.C, 4)]
            witness = {"A1": dist_c[1], "A2": dist_c[2], "A3": dist_c[3], "A4": dist_c[4],
                       "min_weight": next(w for w in range(1, self.C.n + 1) if dist_c[w]),
                       "subsets_scanned": comb(self.C.n, 4), "scan_A4": len(scanned),
                       "oracles_agree": scanned == fast and len(scanned) == dist_c[4]}
            ok = (witness["A1"], witness["A2"], witness["A3"], witness["A4"]) == (0, 0, 0, 3300) \
                and witness["min_weight"] == 4 and witness["oracles_agree"]
            return ok, witness

        self.claim("min_weight", "C has minimum weight 4 with A4 = 3300 (MacWilliams and subset scan agree)",
                   "C has minimal weight 4", run)

    def _certificates(self, targets, make) -> tuple[bool, dict]:
        branches: Counter = Counter()
        parts = 0
        for t in targets:
            cert = make(t)
            parts += len(cert.parts)
            branches.update(cert.branches)
        return True, {"certified": len(targets), "total_parts": parts, "branches": dict(sorted(branches.items()))}

    def group_span(self):
        def rank():
            r = certify.span_dimension_of_weight_words(self.C, 4)
            return r == self.C.k, {"rank": r, "dim": self.C.k}

        def certificates():
            targets = self.C.gen.vectors() + certify.random_codewords(self.C, self.config.samples, self.rng("span"))
            ok, witness = self._certificates(
                targets, lambda t: certify.decompose_weight4(self.C, self.partition, t, self.ctx))
            witness.pop("branches")
            first = certify.decompose_weight4(self.C, self.partition, targets[0], self.ctx)
            witness["example_target_support"] = first.target.support
            witness["example_part_supports"] = first.supports()
            return ok, witness

        self.claim("span.rank", "the weight-4 words of C span C", "weight-4 words span C", rank)
        self.claim("span.certificates",
                   f"constructive weight-4 decompositions for the basis of C and {self.config.samples} random words",
                   "weight-4 words span C (reduction via two-block Steiner systems)", certificates)

    def group_span_shortened(self):
        i = self.config.fixed_coord

        def rank():
            r = certify.span_dimension_of_weight_words(self.C_short, 4)
            return r == self.C_short.k, {"rank": r, "dim": self.C_short.k}

        def certificates():
            short = self.C_short.gen.vectors() + certify.random_codewords(
                self.C_short, self.config.samples, self.rng("span-shortened"))
            targets = [Gf2Vector(self.C.n, certify.insert_zero(v.bits, i)) for v in short]
            ok, witness = self._certificates(targets, lambda t: certify.decompose_weight4_shortened(
                self.C, i, self.partition, t, self.ctx))
            for b in (certify.BRANCH_PAIR_WEIGHT4, certify.BRANCH_LOW, certify.BRANCH_HIGH):
                witness["branches"].setdefault(b, 0)
            witness["branches"] = dict(sorted(witness["branches"].items()))
            return ok, witness

        self.claim("span_shortened.rank", "the weight-4 words of C' span C'", "weight-4 words span C'", rank)
        self.claim("span_shortened.certificates",
                   f"constructive weight-4 decompositions in C' for its basis and {self.config.samples} random words",
                   "weight-4 words span C' (case split on the fixed block)", certificates)

    def group_steiner(self):
        blocks = self.partition.blocks
        ns = [self.config.steiner_n] if self.config.steiner_n else [32, 16]
        for n in ns:
            which_list = list(combinations(range(len(blocks)), 2)) if n == 32 else [(j,) for j in range(len(blocks))]
            for which in which_list:
                def run(which=which, n=n):
                    coords = self.partition.union(which)
                    sub = codes.subcode_supported_on(self.C, coords)
                    supports = [w.support for w in codes.words_of_weight(sub, 4)]
                    ok = len(coords) == n and designs.is_steiner_3_4(supports, n)
                    return ok and len(supports) == comb(n, 3) // 4, {"blocks": len(supports), "n": len(coords)}

                name = "_".join(str(j) for j in which)
                self.claim(f"steiner.{n}.blocks_{name}",
                           f"weight-4 supports of the subcode on blocks {list(which)} form S(3,4,{n})",
                           f"S(3,4,{n}) from weight-4 words", run)

    def group_hamming_ident(self):
        nb = len(self.partition.blocks)
        for which in list(combinations(range(nb), 2)) + [(j,) for j in range(nb)]:
            def run(which=which):
                w = certify.hamming_identification(self.C, self.D, self.partition.union(which))
                return w.pop("ok"), w

            name = "_".join(str(j) for j in which)
            self.claim(f"hamming_ident.blocks_{name}",
                       f"subcode of C on blocks {list(which)} is extended Hamming, dual = restriction of D",
                       "identification with extended Hamming codes", run)

    def group_generation(self):
        def run(code):
            dist = codes.weight_distribution(code)
            return certify.generated_by_weights(code, {16, 24}), {
                "dim": code.k, "A16": dist[16], "A24": dist[24]}

        self.claim("generation.D", "D is spanned by its words of weight 16 and 24",
                   "D generated by weights 16 and 24", lambda: run(self.D))
        self.claim("generation.Dprime", "D' is spanned by its words of weight 16 and 24",
                   "D' generated by weights 16 and 24", lambda: run(self.D_short))

    def group_fusion(self):
        F = frame.FusionLabel

        def table():
            rules = {
                "1/2 x 1/2": (F.HALF, F.HALF, {F.ZERO}),
                "1/2 x 1/16": (F.HALF, F.SIXTEENTH, {F.SIXTEENTH}),
                "1/16 x 1/16": (F.SIXTEENTH, F.SIXTEENTH, {F.ZERO, F.HALF}),
            }
            ok = all(frame.fuse(a, b) == c for a, b, c in rules.values())
            ok &= all(frame.fuse(F.ZERO, h) == {h} == frame.fuse(h, F.ZERO) for h in frame.LABELS)
            ok &= all(frame.fuse(a, b) == frame.fuse(b, a) for a in frame.LABELS for b in frame.LABELS)
            return ok, {k: sorted(str(x) for x in frame.fuse(a, b)) for k, (a, b, _) in rules.items()}

        def associativity():
            bad = frame.associativity_failures()
            return not bad, {"triples": 27, "failures": len(bad)}

        def miyamoto_D():
            words = codes.enumerate_codewords(self.D)
            checked = 0
            for a in words:
                for b in words:
                    s, t, u = (frame.SectorLabel("I", x) for x in (a, b, a + b))
                    for i in range(self.D.n):
                        if frame.miyamoto_sign("tau", i, u) != frame.miyamoto_sign("tau", i, s) * frame.miyamoto_sign("tau", i, t):
                            return False, {"i": i, "a_support": a.support, "b_support": b.support}
                        checked += 1
            return True, {"words": len(words), "checks": checked}

        def miyamoto_C():
            rng = self.rng("miyamoto")
            xs = certify.random_codewords(self.C, MIYAMOTO_PAIRS, rng)
            ys = certify.random_codewords(self.C, MIYAMOTO_PAIRS, rng)
            for a, b in zip(xs, ys):
                s, t, u = (frame.SectorLabel("c", x) for x in (a, b, a + b))
                for i in range(self.C.n):
                    if frame.miyamoto_sign("sigma", i, u) != frame.miyamoto_sign("sigma", i, s) * frame.miyamoto_sign("sigma", i, t):
                        return False, {"i": i, "a_support": a.support, "b_support": b.support}
            return True, {"pairs": MIYAMOTO_PAIRS, "coordinates": self.C.n}

        self.claim("fusion.table", "Ising fusion rules with identity 0", "fusion rules of L(1/2,0)", table)
        self.claim("fusion.associativity", "fusion ring is associative over all 27 triples",
                   "fusion rules of L(1/2,0)", associativity)
        self.claim("fusion.miyamoto_tau", "tau signs are multiplicative over all pairs of D-words and all coordinates",
                   "tau acts by -1 on the 1/16 part", miyamoto_D)
        self.claim("fusion.miyamoto_sigma", f"sigma signs are multiplicative over {MIYAMOTO_PAIRS} sampled pairs from C",
                   "sigma acts by -1 on the 1/2 part", miyamoto_C)

    def group_conformal(self):
        def codewords():
            words = codes.words_of_weight(self.C, 4)
            bad = [w.support for w in words if frame.conformal_weight(frame.half_codeword(w)) != Fraction(w.weight, 2)]
            values = sorted({str(frame.conformal_weight(frame.half_codeword(w))) for w in words})
            return not bad and values == ["2"], {"words": len(words), "values": values, "failures": len(bad)}

        def module():
            h = frame.cited_module()
            value = frame.conformal_weight(h)
            return value == 2, {"value": str(value), "length": len(h)}

        self.claim("conformal.weight4_words", "c/2 has conformal weight wt(c)/2 = 2 for all weight-4 words of C",
                   "conformal weight of V(c) is half the weight of c", codewords)
        self.claim("conformal.example_module", "L(1/2, 0^15, 1/2, 0^15, (1/16)^16) has conformal weight 2",
                   "example Virasoro highest weight module", module)

    GRIESS_TEXT = {
        "table_shape": "table rows have equal length",
        "total_dimension": "component dimensions sum to 196884, the q coefficient of j - 744",
        "weight_2_part": "eigenvalue-0 components sum to 96256, the q^2 coefficient of the VB character",
        "weight_3_2_part": "the eigenvalue-1/2 component has dimension 4371, the q^(3/2) coefficient",
        "tau_minus_on_sixteenth": "tau is -1 exactly on the eigenvalue-1/16 component",
        "eigenvalue_multiset": "mu(2e) eigenvalues are {2, 0, 0, 1/2, 1/16}",
        "axis_scalars": "axis scalars are 1/32 (tau type) and 1/4 (sigma type)",
    }

    def group_griess(self, table: Optional[frame.GriessTable] = None):
        table = table or frame.bundled_griess_table()
        for check in frame.check_griess_consistency(table):
            self.claim(f"griess.{check.name}", self.GRIESS_TEXT.get(check.name, check.name),
                       "decomposition of the Griess algebra", lambda c=check: (c.passed, c.witness))


def run_suite(config: RunConfig, groups=GROUPS) -> CertificateReport:
    return Suite(config).run(groups)
