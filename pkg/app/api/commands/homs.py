import argparse
from typing import Any

from app.api.commands import Subparsers, parse_word_argument
from app.api.tools.json_formatter import vector_output, word_output
from app.engine.braids import comb, pure_alphabet, sigma_alphabet
from app.engine.homs import HomKind, HomSpec, apply_hom, image_invariant
from app.settings import settings


def hom(args: argparse.Namespace) -> dict[str, Any]:
    spec = HomSpec(HomKind(args.kind), args.n, args.strict or settings.strict_homs)
    if args.sigma:
        source = comb(parse_word_argument(args.word, sigma_alphabet(args.n)))
    else:
        source = parse_word_argument(args.word, pure_alphabet(args.n))
    image = apply_hom(spec, source)
    return {
        "kind": str(spec.kind),
        "source": word_output(source),
        "word": word_output(image.word),
        "abelianization": vector_output(image_invariant(spec, image.word)),
        "skipped_factors": image.skipped_factors,
    }


def register(subparsers: Subparsers) -> None:
    parser = subparsers.add_parser("hom", help="image of a pure braid word under phi, psi or xi")
    parser.add_argument("--kind", choices=[str(k) for k in HomKind], required=True)
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--word", required=True, help="JSON array of b_i_j letters or a .json file")
    parser.add_argument("--sigma", action="store_true", help="read a pure sigma word and comb it first")
    parser.add_argument("--strict", action="store_true")
    parser.set_defaults(handler=hom)
