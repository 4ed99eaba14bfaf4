import argparse
import json
import sys
import traceback
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Union

from config import COMPUTE_SETTINGS, LOG_PATH
from modules.errors import MacdonaldError, UsageError
from modules.hecke import EpsilonChar
from modules.induced import InducedModule
from modules.laurent import LaurentPoly, leading_term
from modules.logger import Logger
from modules.macpoly import MacdonaldFamily
from modules.matweight import BASIS_NAMES, MatrixWeightBuilder, askey_wilson_similarity, module_basis
from modules.rootdata import TYPE_NAMES, AffineWeylGroup, Labelling, catalog, catalog_json, weyl_group
from modules.verify import SUITES, run_suite
from modules.weights import inner, inner1

EXIT_OK, EXIT_FAILED, EXIT_ERROR = 0, 1, 2


# Global exception handler
def handle_exception(exc_type, exc_value, exc_traceback):
    if issubclass(exc_type, KeyboardInterrupt):
        sys.__excepthook__(exc_type, exc_value, exc_traceback)
        return

    logger = Logger(log_file=LOG_PATH)
    logger.critical(f"Unhandled exception: {exc_value}", "MAIN_APP",
                    extra={'traceback': traceback.format_exception(exc_type, exc_value, exc_traceback)})
    print(f"Beklenmedik bir hata oluştu: {exc_value}", file=sys.stderr)

sys.excepthook = handle_exception


@dataclass
class RunConfig:
    """Komut satırı ve ortam ayarlarından oluşan çalışma yapılandırması"""
    type_name: str
    J: List[int] = field(default_factory=list)
    epsilon: List[int] = field(default_factory=list)
    trunc_order: int = COMPUTE_SETTINGS['trunc_order']
    label_mode: Union[str, Dict[str, Fraction]] = 'formal'
    output_format: str = COMPUTE_SETTINGS['output_format']

    def validate(self) -> 'RunConfig':
        if self.type_name not in TYPE_NAMES:
            raise UsageError(f"unknown type '{self.type_name}' (expected one of {', '.join(TYPE_NAMES)})")
        finite = catalog(self.type_name).finite_indices
        if any(j not in finite for j in self.J):
            raise UsageError(f"J={self.J} is not a subset of I0={list(finite)}")
        if self.epsilon and len(self.epsilon) != len(self.J):
            raise UsageError("--epsilon needs one sign per element of J")
        if self.trunc_order < 0:
            raise UsageError("truncation order must be nonnegative")
        if self.output_format not in ('pretty', 'json'):
            raise UsageError(f"unknown output format '{self.output_format}'")
        if self.label_mode != 'formal':
            negative = sorted(o for o, v in self.label_mode.items() if v < 0)
            if negative:
                raise UsageError(f"labels must be nonnegative, got negative values for {negative}")
        return self

    def labelling(self) -> Labelling:
        data = catalog(self.type_name)
        if self.label_mode == 'formal':
            return data.formal_labelling()
        unknown = set(self.label_mode) - {o.name for o in data.orbits}
        if unknown:
            raise UsageError(f"unknown label orbits {sorted(unknown)}")
        # Özelleştirilmemiş yörüngeler formel kalır
        values = {o.name: data.formal_labelling()[o.name] for o in data.orbits}
        values.update(Labelling.specialized(self.label_mode).values)
        return Labelling.from_map(values)

    def character(self, group: AffineWeylGroup) -> EpsilonChar:
        signs = self.epsilon or [1] * len(self.J)
        return EpsilonChar.from_map(dict(zip(self.J, signs))).validate(group)


# --- ayrıştırıcılar ---

def parse_vector(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.split(',') if x.strip() != '')
    except ValueError:
        raise UsageError(f"'{text}' is not a comma separated integer vector")


def parse_int_list(text: Optional[str]) -> List[int]:
    return list(parse_vector(text)) if text else []


def parse_labels(text: Optional[str]) -> Union[str, Dict[str, Fraction]]:
    """'formal' ya da 'O1=1/2,O2=0'"""
    if not text or text == 'formal':
        return 'formal'
    values = {}
    for item in text.split(','):
        name, _, value = item.partition('=')
        try:
            values[name.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"label assignment '{item}' is not of the form ORBIT=rational")
    return values


def parse_poly(text: str, type_name: str) -> LaurentPoly:
    """'c@μ;c@μ' biçimi, örn. '1@1,0;-1/2@0,0'"""
    data = catalog(type_name)
    terms: Dict[tuple, Fraction] = {}
    for item in text.split(';'):
        if not item.strip():
            continue
        coeff, sep, coords = item.partition('@')
        if not sep:
            raise UsageError(f"term '{item}' is not of the form coeff@coords")
        mu = parse_vector(coords)
        if len(mu) != data.rank:
            raise UsageError(f"exponent {mu} does not have rank {data.rank}")
        try:
            terms[mu] = terms.get(mu, Fraction(0)) + Fraction(coeff.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"coefficient '{coeff}' is not rational")
    return LaurentPoly(data.space, data.rank, terms)


def parse_matrix(text: str) -> List[List[Fraction]]:
    try:
        return [[Fraction(x) for x in row.split(',')] for row in text.split(';')]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"'{text}' is not a matrix of the form a,b;c,d")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='daha-macdonald',
                                     description="Nonsymmetric and intermediate Macdonald polynomials for A1, A2 and C1v-C1.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--type', dest='type_name', default=COMPUTE_SETTINGS['default_type'], choices=TYPE_NAMES)
    common.add_argument('--J', default='', help="Comma separated subset of I0.")
    common.add_argument('--epsilon', default='', help="Signs of the character on the generators of J.")
    common.add_argument('--trunc', type=int, default=COMPUTE_SETTINGS['trunc_order'], help="Truncation order N in q0.")
    common.add_argument('--labels', default='formal', help="'formal' or assignments like O1=1/2,O2=0.")
    common.add_argument('--format', dest='output_format', default=COMPUTE_SETTINGS['output_format'],
                        choices=('pretty', 'json'))
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('e-poly', parents=[common], help="Nonsymmetric Macdonald polynomial E_lambda.")
    p.add_argument('--lambda', dest='lam', required=True)
    p = sub.add_parser('p-poly', parents=[common], help="Intermediate Macdonald polynomial P_{J,lambda0}.")
    p.add_argument('--lambda', dest='lam', required=True)
    p = sub.add_parser('inner', parents=[common], help="Truncated inner product (f, g).")
    p.add_argument('--f', required=True)
    p.add_argument('--g', required=True)
    p.add_argument('--normalized', action='store_true', help="Divide by (1, 1).")
    p = sub.add_parser('norm-check', parents=[common], help="Norm formula check for P_{J,lambda0}.")
    p.add_argument('--lambda', dest='lam', required=True)
    p = sub.add_parser('gamma', parents=[common], help="Spherical vector Gamma(f) in the induced module.")
    p.add_argument('--f', required=True)
    p = sub.add_parser('matrix-weight', parents=[common], help="Matrix weight in a catalog basis.")
    p.add_argument('--basis', default='steinberg', choices=BASIS_NAMES)
    p.add_argument('--similarity', default=None, help="'aw' for the Askey-Wilson matrix or rows a,b;c,d.")
    p.add_argument('--blocks', action='store_true', help="Report the common block structure.")
    p = sub.add_parser('verify', parents=[common], help="Run a named invariant suite.")
    p.add_argument('--suite', required=True, choices=SUITES)
    p.add_argument('--samples', type=int, default=COMPUTE_SETTINGS['random_samples'])
    p.add_argument('--seed', type=int, default=COMPUTE_SETTINGS['random_seed'])
    sub.add_parser('catalog', parents=[common], help="Catalog data of a root system type.")
    return parser


def emit(payload: Dict, fmt: str, pretty_lines: Sequence[str]) -> None:
    if fmt == 'json':
        print(json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False))
    else:
        for line in pretty_lines:
            print(line)


# --- alt komutlar ---

def run(args: argparse.Namespace, logger: Logger) -> int:
    config = RunConfig(args.type_name, parse_int_list(args.J), parse_int_list(args.epsilon), args.trunc,
                       parse_labels(args.labels), args.output_format).validate()
    group = weyl_group(config.type_name)
    k = config.labelling()
    fmt = config.output_format
    logger.info(f"running {args.command}", "MAIN_APP",
                extra={'type': config.type_name, 'J': config.J, 'order': config.trunc_order})

    if args.command == 'catalog':
        payload = catalog_json(config.type_name)
        emit(payload, fmt, [json.dumps(payload, indent=2, sort_keys=True)])
        return EXIT_OK

    if args.command == 'e-poly':
        family = MacdonaldFamily(group, k, logger)
        rec = family.compute_e(parse_vector(args.lam))
        eigen = {','.join(map(str, b)): v.text() for b, v in rec.eigen.items()}
        emit({'lambda': list(rec.lam), 'poly': rec.poly.to_json(), 'text': rec.poly.text(), 'eigenvalues': eigen},
             fmt, [rec.poly.text()])
        return EXIT_OK

    if args.command == 'p-poly':
        family = MacdonaldFamily(group, k, logger)
        P = family.compute_p(config.J, config.character(group), parse_vector(args.lam))
        payload = {'J': config.J, 'lambda0': list(parse_vector(args.lam)), 'poly': P.to_json(), 'text': P.text()}
        lines = [P.text()]
        if not P.is_zero():
            top, coeff = leading_term(group, P)
            payload['leading'] = {'exponent': list(top), 'coeff': coeff.text()}
            lines.append(f"leading: e[{','.join(map(str, top))}] coefficient {coeff.text()}")
        emit(payload, fmt, lines)
        return EXIT_OK

    if args.command == 'inner':
        f, g = parse_poly(args.f, config.type_name), parse_poly(args.g, config.type_name)
        product = inner1 if args.normalized else inner
        value = product(group, k, f, g, config.trunc_order)
        emit({'normalized': args.normalized, 'series': value.to_json()}, fmt, [value.text()])
        return EXIT_OK

    if args.command == 'norm-check':
        family = MacdonaldFamily(group, k, logger)
        report = family.norm_check(config.J, config.character(group), parse_vector(args.lam), config.trunc_order)
        payload = {'lambda0': list(report['lambda0']), 'J': report['J'], 'epsilon': report['epsilon'],
                   'holds': report['holds'], 'lhs': report['lhs'].to_json(), 'rhs': report['rhs'].to_json()}
        emit(payload, fmt, [f"lhs: {report['lhs'].text()}", f"rhs: {report['rhs'].text()}",
                            'PASS' if report['holds'] else 'FAIL'])
        return EXIT_OK if report['holds'] else EXIT_FAILED

    if args.command == 'gamma':
        module = InducedModule(group, config.J, k, logger)
        image = module.gamma(parse_poly(args.f, config.type_name))
        emit({'J': config.J, 'coordinates': image.to_json(), 'spherical': module.is_spherical(image)},
             fmt, [image.text()])
        return EXIT_OK

    if args.command == 'matrix-weight':
        builder = MatrixWeightBuilder(group, k, logger)
        basis = module_basis(group, k, args.basis)
        weight = builder.weight_matrix(basis)
        if args.similarity:
            R = askey_wilson_similarity(group, k) if args.similarity == 'aw' else parse_matrix(args.similarity)
            weight = builder.similarity(weight, R)
        payload = weight.to_json(group)
        lines = [f"m[{i},{j}] = {entry}" for i, row in zip(payload['index'], payload['entries'])
                 for j, entry in zip(payload['index'], row)]
        if args.blocks:
            report = builder.reducibility_check(weight)
            payload['blocks'] = report['blocks']
            lines.append(f"blocks: {report['blocks']}")
        emit(payload, fmt, lines)
        return EXIT_OK

    if args.command == 'verify':
        records = run_suite(group, k, args.suite, config.trunc_order, args.samples, args.seed, logger)
        failed = [r for r in records if not r.passed]
        payload = {'suite': args.suite, 'type': config.type_name, 'passed': not failed,
                   'checks': [r.to_json() for r in records]}
        lines = [f"{'PASS' if r.passed else 'FAIL'} {r.name}" + (f"  ({r.detail})" if r.detail else '') for r in records]
        lines.append(f"{len(records) - len(failed)}/{len(records)} checks passed")
        emit(payload, fmt, lines)
        return EXIT_FAILED if failed else EXIT_OK

    raise UsageError(f"unknown command '{args.command}'")


def main(argv: Optional[Sequence[str]] = None) -> int:
    logger = Logger(log_file=LOG_PATH)
    args = build_parser().parse_args(argv)
    try:
        return run(args, logger)
    except UsageError as e:
        logger.error(f"Usage error: {e}", "MAIN_APP")
        print(f"UsageError: {e}", file=sys.stderr)
        return EXIT_ERROR
    except MacdonaldError as e:
        logger.error(f"{args.command} failed: {e}", "MAIN_APP", extra={'error': type(e).__name__})
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
