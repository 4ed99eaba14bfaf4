# modules/verify.py
"""
Adlandırılmış değişmez grupları (suite) ve çalıştırıcıları.

Her kontrol bir CheckRecord üretir; hesaplama hataları loglanır ve başarısız kayıt olarak döner.
"""
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from config import COMPUTE_SETTINGS, SWEEP_WEIGHTS

from .errors import MacdonaldError, PreconditionError, UsageError
from .hecke import EpsilonChar, finite_poincare, hecke_word_check, poincare, tau_label, y_bernstein_check
from .induced import InducedModule
from .laurent import LaurentPoly, leading_term, orbit_sum, random_poly, weyl_act
from .logger import Logger
from .macpoly import MacdonaldFamily
from .matweight import MatrixWeightBuilder, askey_wilson_similarity, module_basis
from .params import KScalar
from .rootdata import AffineWeylGroup, Labelling, askey_wilson_parameters, dual_label, dual_label_lemmas
from .weights import inner, nabla_ratio_check, steps_for

SUITES = ('operators', 'orthogonality', 'norms', 'eigen', 'unitarity', 'spherical',
          'combinatorics', 'matrix-weights', 'gram-schmidt')


@dataclass
class CheckRecord:
    suite: str
    name: str
    passed: bool
    detail: str = ''

    def to_json(self) -> Dict:
        return {'suite': self.suite, 'name': self.name, 'passed': self.passed, 'detail': self.detail}


def parabolic_choices(group: AffineWeylGroup) -> List[Tuple[int, ...]]:
    """∅, (varsa) tek elemanlı bir öz alt küme ve I₀"""
    finite = group.data.finite_indices
    choices = [()]
    if len(finite) > 1:
        choices.append((finite[-1],))
    choices.append(tuple(finite))
    return choices


def characters(group: AffineWeylGroup, J: Sequence[int]) -> List[EpsilonChar]:
    if not J:
        return [EpsilonChar.trivial(J)]
    return [EpsilonChar.trivial(J).validate(group), EpsilonChar.sign(J).validate(group)]


class InvariantVerifier:
    """Bir tip ve etiket için suite çalıştırıcısı"""

    def __init__(self, group: AffineWeylGroup, k: Labelling, order: int = None, samples: int = None,
                 seed: int = None, logger: Logger = None, ideal_size: int = None):
        self.group = group
        self.data = group.data
        self.k = k
        self.order = COMPUTE_SETTINGS['trunc_order'] if order is None else order
        self.samples = COMPUTE_SETTINGS['random_samples'] if samples is None else samples
        self.ideal_size = COMPUTE_SETTINGS['ideal_size'] if ideal_size is None else ideal_size
        self.rng = np.random.default_rng(COMPUTE_SETTINGS['random_seed'] if seed is None else seed)
        self.logger = logger or Logger()
        self.family = MacdonaldFamily(group, k, self.logger)
        self.hecke = self.family.hecke
        self.prec = steps_for(self.data.space, self.order)
        self.records: List[CheckRecord] = []

    # --- altyapı ---

    def _check(self, suite: str, name: str, func: Callable[[], object]) -> CheckRecord:
        try:
            outcome = func()
            passed, detail = outcome if isinstance(outcome, tuple) else (bool(outcome), '')
        except MacdonaldError as e:
            self.logger.error(f"{suite}/{name} failed: {e}", "VERIFY",
                              extra={'type': self.data.name, 'error': type(e).__name__})
            passed, detail = False, f"{type(e).__name__}: {e}"
        record = CheckRecord(suite, name, bool(passed), detail)
        if not record.passed and not detail:
            self.logger.error(f"{suite}/{name} does not hold", "VERIFY", extra={'type': self.data.name})
        self.records.append(record)
        return record

    def run(self, suite: str) -> List[CheckRecord]:
        runners = {
            'operators': self.suite_operators,
            'orthogonality': self.suite_orthogonality,
            'norms': self.suite_norms,
            'eigen': self.suite_eigen,
            'unitarity': self.suite_unitarity,
            'spherical': self.suite_spherical,
            'combinatorics': self.suite_combinatorics,
            'matrix-weights': self.suite_matrix_weights,
            'gram-schmidt': self.suite_gram_schmidt,
        }
        if suite not in runners:
            raise UsageError(f"unknown suite '{suite}' (expected one of {', '.join(SUITES)})")
        start = len(self.records)
        runners[suite]()
        records = self.records[start:]
        failed = sum(not r.passed for r in records)
        self.logger.info(f"suite {suite}: {len(records) - failed}/{len(records)} checks passed", "VERIFY",
                         extra={'type': self.data.name, 'order': self.order})
        return records

    def sweep(self) -> List[Tuple[int, ...]]:
        return [tuple(mu) for mu in SWEEP_WEIGHTS[self.data.name]]

    def random_polys(self, count: int) -> List[LaurentPoly]:
        return [random_poly(self.data, self.rng) for _ in range(count)]

    def random_invariant(self, J: Sequence[int]) -> LaurentPoly:
        """Rastgele W_J-değişmez polinom: J-baskın yörünge toplamlarının birleşimi"""
        result = LaurentPoly.zero(self.data.space, self.data.rank)
        for _ in range(2):
            mu = tuple(int(x) for x in self.rng.integers(-2, 3, size=self.data.rank))
            lam0, _ = self.group.j_dominant_rep(mu, J)
            coeff = int(self.rng.integers(1, 4)) * int(self.rng.choice([-1, 1]))
            result = result + orbit_sum(self.group, J, lam0).scale(coeff)
        return result

    def orbit_coefficients(self, weights: Sequence[Tuple[int, ...]]) -> Dict[Tuple[int, ...], KScalar]:
        """a + bτ biçiminde rastgele katsayılar, a, b tam sayı"""
        space = self.data.space
        tau = self.hecke.tau[self.data.finite_indices[0]]
        coeffs = {}
        for mu in weights:
            a, b = (int(x) for x in self.rng.integers(-3, 4, size=2))
            coeffs[mu] = space.from_rational(a) + space.from_rational(b) * tau
        return coeffs

    def _agrees(self, lhs, rhs) -> Tuple[bool, str]:
        ok = lhs.agrees(rhs, self.prec)
        return ok, '' if ok else f"{lhs.text()} != {rhs.text()}"

    # --- suite'ler ---

    def suite_operators(self) -> None:
        """Kuadratik, örgü ve Bernstein-Lusztig-Zelevinsky bağıntıları"""
        group, hecke = self.group, self.hecke
        indices = self.data.indices
        polys = self.random_polys(self.samples)

        def quadratic(i, f):
            t = hecke.tau[i]
            g = hecke.T(i, f) - f.scale(t)
            return hecke.T(i, g) + g.scale(t.inverse()) == LaurentPoly.zero(self.data.space, self.data.rank)

        for n, f in enumerate(polys):
            for i in indices:
                self._check('operators', f"quadratic T{i} #{n}", lambda i=i, f=f: quadratic(i, f))
        for i, j in combinations(indices, 2):
            try:
                m = group.coxeter_exponent(i, j)
            except PreconditionError:
                continue
            left = tuple((i, j)[r % 2] for r in range(m))
            right = tuple((j, i)[r % 2] for r in range(m))
            for n, f in enumerate(polys[:5]):
                self._check('operators', f"braid s{i}s{j} #{n}",
                            lambda left=left, right=right, f=f: hecke_word_check(hecke, [left, right], f))

        def x_bernstein(i, mu, f):
            g = LaurentPoly.monomial(self.data.space, mu)
            sg = hecke.s_act(i, g)
            lhs = hecke.T(i, g * f) - sg * hecke.T(i, f)
            return lhs == hecke.b_apply(i, g - sg) * f

        for n, f in enumerate(polys):
            mu = tuple(int(x) for x in self.rng.integers(-2, 3, size=self.data.rank))
            for i in indices:
                self._check('operators', f"x-bernstein T{i} mu={mu} #{n}", lambda i=i, mu=mu, f=f: x_bernstein(i, mu, f))

        basis = self.family.basis

        def y_commute(b1, b2, f):
            return hecke.Y(b1, hecke.Y(b2, f)) == hecke.Y(b2, hecke.Y(b1, f))

        def y_bernstein_fixed(i, lam, f):
            # ⟨λ, a_i'⟩ = 0 iken T_i ile Y^λ değişmeli
            return hecke.T(i, hecke.Y(lam, f)) == hecke.Y(lam, hecke.T(i, f))

        for n, f in enumerate(polys[:5]):
            for b1, b2 in combinations(basis, 2):
                self._check('operators', f"Y commute {b1},{b2} #{n}", lambda b1=b1, b2=b2, f=f: y_commute(b1, b2, f))
            for i in self.data.finite_indices:
                for lam in basis:
                    if self.data.pairing(lam, self.data.simple_roots[i].gradient) == 0:
                        self._check('operators', f"y-bernstein T{i} Y^{lam} #{n}",
                                    lambda i=i, lam=lam, f=f: y_bernstein_fixed(i, lam, f))
                    self._check('operators', f"y-bernstein cleared T{i} Y^{lam} #{n}",
                                lambda i=i, lam=lam, f=f: y_bernstein_check(hecke, i, lam, f))

    def suite_eigen(self) -> None:
        fam = self.family
        for lam in self.sweep():
            def exact(lam=lam):
                rec = fam.compute_e(lam)
                ok = all(self.hecke.Y(b, rec.poly) == rec.poly.scale(fam.eigenvalue(b, lam)) for b in fam.basis)
                lead = leading_term(self.group, rec.poly)
                return ok and lead[0] == lam and lead[1].is_one()

            def injective(lam=lam):
                tuples = [tuple(fam.eigenvalue(b, mu).text() for b in fam.basis) for mu in self.group.down_set(lam)]
                return len(set(tuples)) == len(tuples)

            def triangular(lam=lam):
                image = self.hecke.Y(fam.basis[0], LaurentPoly.monomial(self.data.space, lam))
                rest = image - LaurentPoly.monomial(self.data.space, lam, fam.eigenvalue(fam.basis[0], lam))
                return all(self.group.order_leq(mu, lam) and mu != lam for mu in rest.terms)

            self._check('eigen', f"Y-eigen E{lam}", exact)
            self._check('eigen', f"injective spectrum below {lam}", injective)
            self._check('eigen', f"triangular Y on e{lam}", triangular)
        for i in self.data.finite_indices:
            for lam in self.sweep():
                if self.data.pairing(lam, self.data.simple_roots[i].gradient) >= 0:
                    self._check('eigen', f"T{i} on E{lam}", lambda i=i, lam=lam: self.family.ti_on_e(i, lam)['holds'])

    def dominant_ideal(self, J: Sequence[int]) -> List[Tuple[int, ...]]:
        """En az ideal_size J-baskın ağırlıktan oluşan, aşağı kapalı küme (down-set'lerin birleşimi)"""
        group = self.group

        def dominant(mu):
            return group.j_dominant_rep(mu, J)[0] == mu

        found: List[Tuple[int, ...]] = []
        radius = 1
        while len(found) < self.ideal_size and radius <= 4:
            candidates = []
            for mu in product(range(-radius, radius + 1), repeat=self.data.rank):
                if mu in found or not dominant(mu):
                    continue
                length = group.length(group.u_prime(mu))
                if length <= group.max_word_length:
                    candidates.append((length, mu))
            for _, lam in sorted(candidates):
                for mu in group.down_set(lam):
                    if mu not in found and dominant(mu):
                        found.append(mu)
                if len(found) >= self.ideal_size:
                    break
            radius += 1
        if len(found) < self.ideal_size:
            self.logger.warning(f"only {len(found)} J-dominant weights found for J={list(J)}", "VERIFY",
                                extra={'type': self.data.name, 'wanted': self.ideal_size})
        return found

    def suite_orthogonality(self) -> None:
        fam = self.family
        for J in parabolic_choices(self.group):
            weights = self.dominant_ideal(J)
            for eps in characters(self.group, J):
                polys = {lam0: fam.compute_p(J, eps, lam0) for lam0 in weights}
                polys = {lam0: p for lam0, p in polys.items() if not p.is_zero()}
                for a, b in combinations(polys, 2):
                    def orthogonal(a=a, b=b):
                        value = inner(self.group, self.k, polys[a], polys[b], self.order)
                        return value.is_zero_to(self.prec), value.text()
                    self._check('orthogonality', f"J={list(J)} eps={[eps[j] for j in J]} P{a} P{b}", orthogonal)
        finite = self.data.finite_indices
        for lam in product(range(-1, 2), repeat=self.data.rank):
            if self.group.j_dominant_rep(lam, finite)[0] != lam or self.group.down_set(lam) != [lam]:
                continue

            def hermitian(lam=lam):
                orbit = list(fam.orbit_norms(lam))
                report = fam.hermitian_check(lam, self.orbit_coefficients(orbit), self.orbit_coefficients(orbit), self.order)
                return report['holds'], '' if report['holds'] else f"{report['lhs'].text()} vs {report['exact'].text()}"

            self._check('orthogonality', f"hermitian symmetry on the orbit of {lam}", hermitian)

    def suite_norms(self) -> None:
        fam = self.family
        for J in parabolic_choices(self.group):
            for lam0 in self.dominant_ideal(J):
                stab = self.group.stabilizer(lam0, J)
                for eps in characters(self.group, J):
                    if any(eps[j] == -1 for j in stab):
                        continue
                    self._check('norms', f"J={list(J)} eps={[eps[j] for j in J]} lambda0={lam0}",
                                lambda J=J, eps=eps, lam0=lam0: fam.norm_check(J, eps, lam0, self.order)['holds'])

    def suite_unitarity(self) -> None:
        """T_i (i∈I), T(u) (u∈Ω) üniter; X^μ'nün eşleniği X^{−μ}; U_J^{(ε)} öz-eşlenik"""
        group, k, order = self.group, self.k, self.order
        hecke = self.hecke
        omegas = [u for u in group.omega if u != group.one]
        choices = [(J, eps) for J in parabolic_choices(group) if J for eps in characters(group, J)]
        for n in range(self.samples):
            f, g = self.random_polys(2)
            try:
                base = inner(group, k, f, g, order)
            except MacdonaldError as e:
                self._check('unitarity', f"(f, g) #{n}", lambda e=e: (False, f"{type(e).__name__}: {e}"))
                continue
            for i in self.data.indices:
                self._check('unitarity', f"T{i} unitary #{n}", lambda f=f, g=g, i=i, base=base: self._agrees(
                    inner(group, k, hecke.T(i, f), hecke.T(i, g), order), base))
            for u in omegas:
                self._check('unitarity', f"T({group.word_text(u)}) unitary #{n}",
                            lambda f=f, g=g, u=u, base=base: self._agrees(
                                inner(group, k, hecke.omega(u, f), hecke.omega(u, g), order), base))
            mu = tuple(int(x) for x in self.rng.integers(-2, 3, size=self.data.rank))
            self._check('unitarity', f"X{mu} adjoint #{n}", lambda f=f, g=g, mu=mu: self._agrees(
                inner(group, k, f.shift(mu), g, order), inner(group, k, f, g.shift(tuple(-x for x in mu)), order)))
            for J, eps in choices:
                name = f"U_J self-adjoint J={list(J)} eps={[eps[j] for j in J]} #{n}"
                self._check('unitarity', name, lambda f=f, g=g, J=J, eps=eps: self._agrees(
                    inner(group, k, hecke.symmetrise(J, eps, f), g, order),
                    inner(group, k, f, hecke.symmetrise(J, eps, g), order)))

    def suite_spherical(self) -> None:
        choices = {'A2': (2,), 'C1v-C1': (), 'A1': ()}
        J = choices[self.data.name]
        module = InducedModule(self.group, J, self.k, self.logger)
        for n in range(min(self.samples, 10)):
            f = self.random_invariant(J)

            def check(f=f):
                h = module.gamma(f)
                if not module.is_spherical(h):
                    return False, 'gamma image is not spherical'
                top = weyl_act(self.data, module.w0, f).scale(module.highest_scalar())
                if h.coordinate(module.top) != top:
                    return False, 'highest coordinate mismatch'
                report = module.spherical_project(h)
                ok = report['gamma_matches'] and report['in_AJ'] and report['top_symmetric'] and report['f'] == f
                return ok, '' if ok else str({key: v for key, v in report.items() if key != 'f'})

            self._check('spherical', f"gamma round trip J={list(J)} #{n}", check)

    def suite_combinatorics(self) -> None:
        group, data = self.group, self.data
        finite = group.finite_group()
        for w in finite:
            self._check('combinatorics', f"inversions {group.word_text(w)}",
                        lambda w=w: len(group.inversion_set(w)) == group.length(w)
                        and all(not data.is_positive(data.act_root(w, b)) for b in group.inversion_set(w)))

        def subword_bruhat(v, w):
            _, word = group.reduced_word(w)
            products = {group.one}
            for i in word:
                products |= {y * group.s(i) for y in products}
            return (v in products) == group.bruhat_leq(v, w)

        for v, w in product(finite, finite):
            self._check('combinatorics', f"bruhat {group.word_text(v)} <= {group.word_text(w)}",
                        lambda v=v, w=w: subword_bruhat(v, w))
        label = tau_label(group, self.k)
        for J in parabolic_choices(group):
            def cosets(J=J):
                seen = set()
                for w in finite:
                    v, m = group.coset_decompose(w, J)
                    if v * m != w or group.length(v) + group.length(m) != group.length(w):
                        return False
                    seen.add(v)
                return len(seen) * len(group.parabolic(J)) == len(finite)

            def poincare_factor(J=J):
                total = poincare(finite, label)
                split = poincare(group.minimal_coset_reps(J), label) * poincare(group.parabolic(J), label)
                return total == split

            self._check('combinatorics', f"coset decomposition J={list(J)}", cosets)
            self._check('combinatorics', f"poincare factorization J={list(J)}", poincare_factor)

        def involution():
            return dual_label(data, dual_label(data, self.k)) == self.k

        self._check('combinatorics', 'dual label involution', involution)
        for name, ok in dual_label_lemmas(data, self.k).items():
            self._check('combinatorics', f"dual label lemma {name}", lambda ok=ok: ok)

    def suite_matrix_weights(self) -> None:
        builder = MatrixWeightBuilder(self.group, self.k, self.logger)
        if self.data.name == 'C1v-C1':
            self._c1_matrix_checks(builder)
        elif self.data.name == 'A2':
            self._a2_matrix_checks(builder)
        else:
            return
        basis = module_basis(self.group, self.k, 'steinberg')
        weight = builder.weight_matrix(basis)
        for n in range(min(self.samples, 5)):
            f, g = self.random_invariant(basis.J), self.random_invariant(basis.J)
            self._check('matrix-weights', f"inner via matrix #{n}", lambda f=f, g=g: self._agrees(
                builder.inner_via_matrix(f, g, basis, self.order, weight), inner(self.group, self.k, f, g, self.order)))

    def _c1_matrix_checks(self, builder: MatrixWeightBuilder) -> None:
        space = self.data.space
        params = askey_wilson_parameters(self.data, self.k)
        a, b = params['a'], params['b']
        half = space.from_rational(1) / 2

        def poly(terms):
            return LaurentPoly(space, 1, terms)

        steinberg = module_basis(self.group, self.k, 'steinberg')
        weight = builder.weight_matrix(steinberg)
        expected = [
            [poly({(0,): (1 - a * b) * half}), poly({(1,): half, (-1,): half, (0,): -(a + b) * half})],
            [poly({(1,): -(a * b) * half, (-1,): -(a * b) * half, (0,): (a + b) * half}), poly({(0,): (1 - a * b) * half})],
        ]
        self._check('matrix-weights', 'C1 steinberg weight', lambda: weight.rows() == expected)
        conj = builder.similarity(weight, askey_wilson_similarity(self.group, self.k))
        scale = (a - b) * half
        diagonal = [
            poly({(1,): -scale, (-1,): -scale, (0,): scale * (a + a.inverse())}),
            poly({(1,): scale, (-1,): scale, (0,): -scale * (b + b.inverse())}),
        ]
        zero = poly({})
        self._check('matrix-weights', 'C1 steinberg similarity', lambda: conj.rows() == [[diagonal[0], zero], [zero, diagonal[1]]])
        eigen = module_basis(self.group, self.k, 'eigen')
        eweight = builder.weight_matrix(eigen)
        factor = poly({(0,): 1}) - poly({(1,): a}) - poly({(1,): b}) + poly({(2,): a * b})
        factor = factor * factor.star().map_coefficients(lambda c: c.star())
        d2 = factor.scale((1 - (a * b).inverse()) * half)
        self._check('matrix-weights', 'C1 eigen weight', lambda: eweight.rows() == [[poly({(0,): (1 - a * b) * half}), zero], [zero, d2]])
        shift = {'O1': 1, 'O2': 1}
        self._check('matrix-weights', 'C1 nabla ratio',
                    lambda: nabla_ratio_check(self.group, self.k, shift, factor, self.order))
        tau = self.hecke.tau[1]
        ab_inv = (a * b).inverse()
        T1 = builder.matrix_of_operator('T1', steinberg)
        expected_T1 = [
            [poly({(0,): tau}), poly({(1,): tau, (-1,): tau, (0,): -tau * (a + b) * ab_inv})],
            [zero, poly({(0,): tau * ab_inv})],
        ]
        self._check('matrix-weights', 'C1 T1 steinberg', lambda: T1 == expected_T1)
        T1e = builder.matrix_of_operator('T1', eigen)
        self._check('matrix-weights', 'C1 T1 eigen', lambda: T1e == [[poly({(0,): tau}), zero], [zero, poly({(0,): tau * ab_inv})]])

    def _a2_matrix_checks(self, builder: MatrixWeightBuilder) -> None:
        space = self.data.space
        group = self.group
        tau = self.hecke.tau[1]
        t2 = tau * tau

        def poly(terms):
            return LaurentPoly(space, 2, terms)

        zero = poly({})
        m1 = orbit_sum(group, self.data.finite_indices, (1, 0))
        m2 = orbit_sum(group, self.data.finite_indices, (0, 1))
        steinberg = module_basis(group, self.k, 'steinberg')
        diag = 1 - t2 - t2.inverse()
        expected_x = [
            [poly({(0, 0): 2}), m1.scale(t2 + 1), m2.scale(t2)],
            [zero, poly({(0, 0): diag}), zero],
            [zero, zero, poly({(0, 0): diag})],
        ]
        self._check('matrix-weights', 'A2 x steinberg', lambda: builder.matrix_of_operator('x', steinberg) == expected_x)
        eigen = module_basis(group, self.k, 'eigen')
        self._check('matrix-weights', 'A2 x eigen', lambda: builder.matrix_of_operator('x', eigen) == [
            [poly({(0, 0): 2}), zero, zero], [zero, poly({(0, 0): diag}), zero], [zero, zero, poly({(0, 0): diag})]])
        weight = builder.weight_matrix(eigen)
        w0 = finite_poincare(group, self.k)
        one, s1, s21 = eigen.reps
        sixth = space.from_rational(1) / 6
        self._check('matrix-weights', 'A2 m11', lambda: weight.entry(one, one) == poly({(0, 0): w0 * sixth}))
        self._check('matrix-weights', 'A2 diagonal symmetry', lambda: weight.entry(s1, s1) == weight.entry(s21, s21))
        self._check('matrix-weights', 'A2 tau6 twist', lambda: weight.entry(s1, s21) ==
                    weight.entry(s21, s1).star().scale(t2 * t2 * t2))
        report = builder.reducibility_check(weight)
        self._check('matrix-weights', 'A2 block structure', lambda: (report['block_sizes'] == [1, 2], str(report['blocks'])))
        witness = (1 + t2.inverse()) * w0 * sixth
        self._check('matrix-weights', 'A2 irreducibility witness',
                    lambda: report['components'].get((2, 0), [[space.zero] * 3] * 3)[1][2] == witness)
        for n in range(min(self.samples, 3)):
            f, g = self.random_polys(2)
            self._check('matrix-weights', f"A2 x self-adjoint #{n}",
                        lambda f=f, g=g: builder.x_element_adjointness(f, g, self.order))

    def suite_gram_schmidt(self) -> None:
        if self.data.name == 'C1v-C1':
            return
        for lam in self.sweep():
            if self.group.length(self.group.u_prime(lam)) > 6:
                continue
            self._check('gram-schmidt', f"E{lam} vs Gram-Schmidt",
                        lambda lam=lam: self.family.gram_schmidt_check(lam, self.order))


def run_suite(group: AffineWeylGroup, k: Labelling, suite: str, order: Optional[int] = None,
              samples: Optional[int] = None, seed: Optional[int] = None,
              logger: Optional[Logger] = None, ideal_size: Optional[int] = None) -> List[CheckRecord]:
    return InvariantVerifier(group, k, order, samples, seed, logger, ideal_size).run(suite)
