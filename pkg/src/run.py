import sys
import json
import argparse

import pandas as pd
from tqdm import tqdm

import config
from abelian import AbelianGroup
from catalog import build_document, catalog_checksum, load_catalog
from catalog.catalog import canonical_json
from extensions import classify_group
from orbits import filter_basket_table
from partitions.exact_sequences import enumerate_extensions, extension_exists
from reproduce import TARGETS, run_targets, save_result
from rr import Basket, enumerate_baskets

EXIT_MATCH = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2


class UsageError(ValueError):
    pass


def dumps(document):
    return json.dumps(document, sort_keys=True, indent=2)


def emit(args, document, frame=None):
    """Print a result as canonical JSON or as a plain table"""
    if args.format == "json" or frame is None:
        print(dumps(document))
    elif frame.empty:
        print("(no rows)")
    else:
        print(frame.to_string(index=False))


def cmd_classify(args):
    classification = classify_group(AbelianGroup.parse(args.group))
    document = classification.to_json()
    frame = pd.DataFrame(
        [{"group": document["group"], "verdict": document["verdict"]}]
    )
    emit(args, document, frame)
    return EXIT_MATCH


def cmd_extensions(args):
    sub, quot = AbelianGroup.parse(args.sub), AbelianGroup.parse(args.quot)
    if args.total:
        total = AbelianGroup.parse(args.total)
        exists = extension_exists(sub, quot, total)
        emit(args, {"sub": str(sub), "quot": str(quot), "total": str(total), "exists": exists})
        return EXIT_MATCH
    groups = enumerate_extensions(sub, quot)
    document = {"sub": str(sub), "quot": str(quot), "extensions": [str(g) for g in groups]}
    frame = pd.DataFrame({"group": [str(g) for g in groups], "pretty": [g.pretty() for g in groups]})
    emit(args, document, frame)
    return EXIT_MATCH


def cmd_baskets(args):
    baskets = enumerate_baskets(args.h0, args.index, progress=config.PROGRESS)
    document = [basket.to_json() for basket in baskets]
    frame = pd.DataFrame(
        {
            "basket": [str(basket) for basket in baskets],
            "miyaoka_sum": [str(basket.miyaoka_sum) for basket in baskets],
            "cube": [str(basket.anticanonical_cube(args.h0)) for basket in baskets],
        }
    )
    emit(args, document, frame)
    return EXIT_MATCH


def cmd_filter_baskets(args):
    h = AbelianGroup.parse(args.group)
    with open(args.input, encoding="utf-8") as file:
        records = json.load(file)
    baskets = [Basket.from_json(record) for record in records]
    kept = filter_basket_table(h, baskets, args.mode)
    document = [
        {
            "basket": basket.to_json(),
            "groupings": [str(configuration) for configuration in configurations],
        }
        for basket, configurations in kept
    ]
    frame = pd.DataFrame(
        {
            "basket": [str(basket) for basket, _ in kept],
            "groupings": [" | ".join(str(c) for c in configurations) for _, configurations in kept],
        }
    )
    emit(args, document, frame)
    return EXIT_MATCH


def cmd_reproduce(args):
    if not args.all and not args.target:
        raise UsageError("reproduce needs --target or --all")
    names = list(TARGETS) if args.all else args.target
    results = run_targets(names, bless=args.bless, threads=args.threads)
    if args.save:
        for result in results:
            tqdm.write(f"Saved {save_result(result)}", file=sys.stderr)
    if args.format == "json":
        # one list holding a document per target, in the requested order
        print(dumps([result.to_json() for result in results]))
        return _exit_status(results)
    for result in results:
        status = "match" if result.match else "MISMATCH"
        print(f"{result.name}: {result.summary} [{status}]")
        print(result.to_frame().to_string(index=False))
        if result.diffs:
            print(pd.DataFrame(result.diffs).to_string(index=False))
        print()
    return _exit_status(results)


def _exit_status(results):
    return EXIT_MATCH if all(result.match for result in results) else EXIT_MISMATCH


def cmd_catalog(args):
    document = build_document()
    if args.check:
        stored = load_catalog()
        match = stored == document
        print(f"sha256 {catalog_checksum(document)}")
        print(f"catalog.json {'matches' if match else 'differs from'} the embedded tables")
        return EXIT_MATCH if match else EXIT_MISMATCH
    sys.stdout.write(canonical_json(document))
    return EXIT_MATCH


def build_parser():
    parser = argparse.ArgumentParser(
        description="Abelian groups acting on terminal Fano threefolds: classification and table reproduction"
    )
    parser.add_argument(
        "-f",
        "--format",
        choices=("table", "json"),
        default="table",
        help="Human readable tables or canonical JSON",
    )
    parser.add_argument(
        "--max-order",
        type=int,
        default=config.MAX_ORACLE_ORDER,
        help="Largest group order for brute force checks",
    )
    parser.add_argument(
        "-q", "--quiet", action="store_true", help="To hide the progress bars"
    )
    subparsers = parser.add_subparsers(dest="command")

    classify = subparsers.add_parser("classify", help="To classify a finite abelian group")
    classify.add_argument("-g", "--group", required=True, help='Invariant factors, e.g. "4,4,4,4"')
    classify.set_defaults(handler=cmd_classify)

    extensions = subparsers.add_parser("extensions", help="To list the extensions of quot by sub")
    extensions.add_argument("--sub", required=True)
    extensions.add_argument("--quot", required=True)
    extensions.add_argument("--total", help="Only decide whether this group is an extension")
    extensions.set_defaults(handler=cmd_extensions)

    baskets = subparsers.add_parser("baskets", help="To enumerate the baskets of index one Fano threefolds")
    baskets.add_argument("--h0", type=int, default=config.DEFAULT_H0)
    baskets.add_argument("--index", type=int, default=1, help="The Fano index")
    baskets.set_defaults(handler=cmd_baskets)

    filter_baskets = subparsers.add_parser("filter-baskets", help="To keep the baskets a K3 group can act on")
    filter_baskets.add_argument("-g", "--group", required=True)
    filter_baskets.add_argument("-i", "--input", required=True, help="JSON list of baskets")
    filter_baskets.add_argument("--mode", choices=("any", "cyclic", "du_val"), default="any")
    filter_baskets.set_defaults(handler=cmd_filter_baskets)

    reproduce = subparsers.add_parser("reproduce", help="To recompute the tables and compare with the snapshots")
    reproduce.add_argument("-t", "--target", action="append", choices=list(TARGETS))
    reproduce.add_argument("-a", "--all", action="store_true", help="To run every target")
    reproduce.add_argument("--bless", action="store_true", help="To rewrite the snapshots")
    reproduce.add_argument("--save", action="store_true", help=f"To save the rows to {config.OUTPUT_DATA_DIR}")
    reproduce.add_argument("--threads", type=int, default=config.THREADS)
    reproduce.set_defaults(handler=cmd_reproduce)

    catalog = subparsers.add_parser("catalog", help="To export the catalog")
    catalog.add_argument("action", choices=("dump",))
    catalog.add_argument("--check", action="store_true", help="To compare catalog.json with the tables")
    catalog.set_defaults(handler=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        return EXIT_USAGE if error.code else EXIT_MATCH
    if args.command is None:
        parser.print_help()
        return EXIT_MATCH

    config.MAX_ORACLE_ORDER = args.max_order
    config.PROGRESS = not args.quiet
    try:
        return args.handler(args)
    except ValueError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
