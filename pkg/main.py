# main.py
# INTERFAZ DE LÍNEA DE COMANDOS: CÁLCULO, RECUPERACIÓN, ESCALADO Y VERIFICACIÓN DE REDES

import sys
import os
import logging
import argparse
import re
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

# Agregar el directorio actual al path de Python
current_dir = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, current_dir)

from src.arith.field import FieldDescriptor, parse_element
from src.config.settings import Config
from src.curves.weierstrass import WeierstrassCurve
from src.nets import (CurveNetContext, PropagationEngine, SeedSet, apply_scaling, check_axiom,
                      classify, fill_block, homothety, net_from_curve, normalize, recover,
                      sample_quadruples)
from src.nets.propagate import OPTIONAL_SEEDS, baseset
from src.nets.recover import NORMAL_FORM
from src.utils.errors import EllNetError, ParseError, RankMismatch, VerificationFailure
from src.utils.grid_format import format_grid
from src.utils.serialization import (ClassificationModel, CurveModel, NetBlockModel, ScalingModel,
                                     SeedFileModel, VerificationModel, dump_model, load_model)

logger = logging.getLogger('ellnet')

EXIT_OK = 0
EXIT_USAGE = 1

# from-curve muestra el bloque y la rejilla de texto
FORMAT_DEFAULTS = {'from-curve': 'both'}


class UsageParser(argparse.ArgumentParser):
    """ArgumentParser cuyos errores de uso terminan con código 1"""

    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # valores como -2:6 o -1,-2 son argumentos, no opciones
        self._negative_number_matcher = re.compile(r"^-\d")

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def setup_logging():
    """Configura el sistema de logging"""
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if Config.LOG_FILE:
        handlers.append(logging.FileHandler(Config.LOG_FILE))
    logging.basicConfig(
        level=getattr(logging, Config.LOG_LEVEL, logging.WARNING),
        format=Config.LOG_FORMAT,
        handlers=handlers,
        force=True,
    )


# ========== PARSEO DE ARGUMENTOS ==========

def parse_ranges(text: str, rank: int) -> List[Tuple[int, int]]:
    """'lo:hi,lo:hi' por eje; los ejes omitidos quedan en 0:0"""
    ranges = []
    for part in text.split(','):
        try:
            lo, hi = (int(c) for c in part.split(':'))
        except ValueError:
            raise ParseError(f"rango mal formado: {part!r}")
        if lo > hi:
            raise ParseError(f"rango vacío: {part!r}")
        ranges.append((lo, hi))
    if len(ranges) > rank:
        raise RankMismatch(f"{len(ranges)} rangos para rango {rank}")
    return ranges + [(0, 0)] * (rank - len(ranges))


def parse_values(desc: FieldDescriptor, text: str) -> List:
    return [parse_element(desc, item) for item in text.split(',') if item.strip()]


def load_curve(args) -> Tuple[WeierstrassCurve, list]:
    if args.curve:
        model = load_model(CurveModel, args.curve)
        curve, points = model.to_curve()
        desc = curve.field
    else:
        if not args.a:
            raise ParseError("se necesita --a o --curve")
        desc = FieldDescriptor.parse(args.field)
        coefficients = parse_values(desc, args.a)
        if len(coefficients) != 5:
            raise ParseError("--a necesita cinco coeficientes a1,a2,a3,a4,a6")
        curve = WeierstrassCurve(*coefficients)
        points = []
    for text in args.point or []:
        coords = parse_values(desc, text)
        if len(coords) != 2:
            raise ParseError(f"punto mal formado: {text!r}")
        points.append(curve.point(*coords))
    return curve, points


def load_seeds(args) -> SeedSet:
    if args.seed_file:
        return load_model(SeedFileModel, args.seed_file).to_seedset()
    if args.rank is None or args.seeds is None:
        raise ParseError("se necesita --seed-file o bien --rank y --seeds")
    desc = FieldDescriptor.parse(args.field)
    values = parse_values(desc, args.seeds)
    order = baseset(args.rank) + OPTIONAL_SEEDS.get(args.rank, [])
    if len(values) > len(order):
        raise ParseError(f"{len(values)} semillas para {len(order)} posiciones")
    return SeedSet(args.rank, desc, dict(zip(order, values)))


def load_block(path: str):
    model = load_model(NetBlockModel, path)
    return model.to_net(), [tuple(r) for r in model.ranges]


# ========== SALIDA ==========

def emit_text(text: str, args):
    print(text)
    if args.out:
        Path(args.out).write_text(text + "\n", encoding='utf-8')


def emit_net(W, ranges, args):
    model = NetBlockModel.from_net(W, ranges)
    text = dump_model(model)
    if args.format in ('json', 'both'):
        print(text)
    if args.format in ('grid', 'both'):
        print(format_grid(W, ranges))
    if args.out:
        Path(args.out).write_text(text + "\n", encoding='utf-8')


# ========== COMANDOS ==========

def cmd_from_curve(args) -> int:
    curve, points = load_curve(args)
    ctx = CurveNetContext(curve, points)
    ranges = parse_ranges(args.range, ctx.rank)
    emit_net(net_from_curve(ctx, ranges), ranges, args)
    return EXIT_OK


def cmd_from_seeds(args) -> int:
    seeds = load_seeds(args)
    ranges = parse_ranges(args.range, seeds.rank)
    engine = PropagationEngine(seeds)
    block = fill_block(engine, ranges)
    emit_net(block.to_net(provenance={'seeds': len(seeds.values)}), ranges, args)
    return EXIT_OK


def cmd_recover(args) -> int:
    W, _ = load_block(args.net)
    normalised, _ = normalize(W)
    curve, points = recover(normalised)
    emit_text(dump_model(CurveModel.from_curve(curve, points, NORMAL_FORM)), args)
    return EXIT_OK


def cmd_classify(args) -> int:
    W, _ = load_block(args.net)
    emit_text(dump_model(ClassificationModel.from_classification(classify(W))), args)
    return EXIT_OK


def cmd_normalize(args) -> int:
    W, ranges = load_block(args.net)
    normalised, _ = normalize(W)
    emit_net(normalised, ranges, args)
    return EXIT_OK


def cmd_scale(args) -> int:
    W, ranges = load_block(args.net)
    if args.lam is not None:
        scaled = homothety(W, parse_element(W.field, args.lam))
    else:
        f = load_model(ScalingModel, args.form).to_scaling(W.field)
        scaled = apply_scaling(W, f)
    emit_net(scaled, ranges, args)
    return EXIT_OK


def cmd_verify(args) -> int:
    W, _ = load_block(args.net)
    seed = Config.resolve_seed(args.seed)
    quadruples = sample_quadruples(W, args.samples, seed)
    report = check_axiom(W, quadruples)
    emit_text(dump_model(VerificationModel.from_report(report)), args)
    logger.info("verificación con semilla %d: %s", seed, report.summary())
    if not report.passed:
        instance, residual = report.failures[0]
        raise VerificationFailure(f"residuo {residual} en la cuádrupla {instance}")
    return EXIT_OK


def cmd_extract_seeds(args) -> int:
    W, _ = load_block(args.net)
    emit_text(dump_model(SeedFileModel.from_seedset(SeedSet.from_net(W))), args)
    return EXIT_OK


# ========== PARSER ==========

def build_parser() -> UsageParser:
    parser = UsageParser(prog='ellnet', description='Redes elípticas y curvas de Weierstrass en aritmética exacta')
    parser.add_argument('--mode', choices=sorted(Config.MODES), help='modo de propagación')
    parser.add_argument('--format', choices=('json', 'grid', 'both'),
                        help='salida en stdout; por defecto both para from-curve y json para el resto')
    parser.add_argument('--out', help='escribe el JSON resultante en este archivo')
    sub = parser.add_subparsers(dest='command', required=True, parser_class=UsageParser)

    p = sub.add_parser('from-curve', help='bloque de W_{C,P} desde una curva y sus puntos')
    p.add_argument('--field', default=Config.DEFAULT_FIELD)
    p.add_argument('--a', help='a1,a2,a3,a4,a6')
    p.add_argument('--curve', help='archivo JSON de curva (con puntos)')
    p.add_argument('--point', action='append', help='x,y (repetible)')
    p.add_argument('--range', required=True)
    p.set_defaults(handler=cmd_from_curve)

    p = sub.add_parser('from-seeds', help='bloque propagado desde semillas')
    p.add_argument('--field', default=Config.DEFAULT_FIELD)
    p.add_argument('--rank', type=int)
    p.add_argument('--seeds', help='valores en el orden del conjunto base')
    p.add_argument('--seed-file', help='archivo JSON de semillas')
    p.add_argument('--range', required=True)
    p.set_defaults(handler=cmd_from_seeds)

    for name, handler, text in (
            ('recover', cmd_recover, 'curva y puntos de una red no degenerada'),
            ('classify', cmd_classify, 'degeneración, Δ y j de una red'),
            ('normalize', cmd_normalize, 'normalización de una red'),
            ('extract-seeds', cmd_extract_seeds, 'conjunto base de un bloque')):
        p = sub.add_parser(name, help=text)
        p.add_argument('net', help='archivo JSON de bloque')
        p.set_defaults(handler=handler)

    p = sub.add_parser('scale', help='homotecia o escalado por forma cuadrática')
    p.add_argument('net')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--lambda', dest='lam')
    group.add_argument('--form', help='archivo JSON de forma cuadrática')
    p.set_defaults(handler=cmd_scale)

    p = sub.add_parser('verify', help='comprueba la relación sobre cuádruplas aleatorias')
    p.add_argument('net')
    p.add_argument('--samples', type=int, default=Config.DEFAULT_SAMPLES)
    p.add_argument('--seed', type=int)
    p.set_defaults(handler=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    Config.load_environment()
    args = build_parser().parse_args(argv)
    if args.format is None:
        args.format = FORMAT_DEFAULTS.get(args.command, 'json')
    if args.mode:
        Config.set_mode(args.mode)
    setup_logging()
    logger.debug("modo %s, comando %s", Config.get_current_mode(), args.command)
    try:
        return args.handler(args)
    except EllNetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
