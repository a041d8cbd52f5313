"""
EckartNU - bound states of the combined Eckart / deformed Hylleraas
potential in D dimensions.

Closed-form energies and wavefunctions from the parametric
Nikiforov-Uvarov method, potential and effective-potential curves, and a
finite-difference oracle that checks the closed form.

Usage:
    python main.py spectrum --config configs/table1.json --n-max 5 --layout paper --dims 3,4,5
    python main.py validate --config configs/eckart.json --n 0 --l 0 --dims 3 --grid-n 16000
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from config import get_settings
from config.run_config import load_config, parse_override
from api import commands
from api.models import CentrifugalScheme, Family, OutputFormat, TableLayout
from services.errors import ConfigError
from services.storage_service import StorageService

logger = logging.getLogger(__name__)

# Dedicated flags that override config keys
PARAMETER_FLAGS = ("V0", "V1", "V2", "a", "b", "alpha", "omega", "lambda", "mass", "hbar")


def _dims(value: str) -> list[int]:
    try:
        dims = [int(item) for item in value.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"dimensions must be integers: {value!r}") from None
    if not dims or any(D < 2 for D in dims):
        raise argparse.ArgumentTypeError(f"dimensions must all be >= 2: {value!r}")
    return dims


def _schemes(value: str) -> list[CentrifugalScheme]:
    try:
        return [CentrifugalScheme(item.strip()) for item in value.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown scheme in {value!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration")
    common.add_argument("--set", dest="overrides", action="append", default=[], metavar="KEY=VALUE",
                        help="Override a config key (repeatable)")
    for key in PARAMETER_FLAGS:
        common.add_argument(f"--{key}", dest=f"param_{key}", type=float, default=None,
                            help=f"Override config key {key}")
    common.add_argument("--format", choices=[f.value for f in OutputFormat], default=None)
    common.add_argument("--output", default=None, help="Output path (default: stdout)")
    common.add_argument("--metadata", action="store_true", help="Write <output>.meta.json next to the output")

    parser = argparse.ArgumentParser(description="Bound states of the Eckart plus deformed Hylleraas potential")
    parser.add_argument("--verbose", "-v", action="store_true", help="Debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", parents=[common], help="Closed-form energy table")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--l-max", type=int, default=None)
    p.add_argument("--dims", type=_dims, default=[3])
    p.add_argument("--layout", choices=[t.value for t in TableLayout], default=TableLayout.RECT.value)
    p.add_argument("--physical-only", action="store_true")
    p.add_argument("--diff-paper", type=int, choices=[1, 2, 3], default=None)

    p = sub.add_parser("potential", parents=[common], help="Potential curve samples")
    p.add_argument("--family", choices=[f.value for f in Family], default=Family.COMBINED.value)
    p.add_argument("--r-min", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--samples", type=int, default=200)

    p = sub.add_parser("effective", parents=[common], help="Effective potential per centrifugal scheme")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--dims", type=_dims, default=[3])
    p.add_argument("--schemes", type=_schemes, default=list(CentrifugalScheme))
    p.add_argument("--r-min", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--samples", type=int, default=200)

    p = sub.add_parser("wavefunction", parents=[common], help="Radial wavefunction samples")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--dims", type=_dims, default=[3])
    p.add_argument("--r-min", type=float, required=True)
    p.add_argument("--r-max", type=float, required=True)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--normalize", action="store_true")
    p.add_argument("--allow-spurious", action="store_true",
                   help="Sample a state from the non-normalizable branch instead of exiting with 2")

    p = sub.add_parser("validate", parents=[common], help="Check a closed-form energy against the oracle")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--dims", type=_dims, default=[3])
    p.add_argument("--scheme", choices=[s.value for s in CentrifugalScheme], default=CentrifugalScheme.EXACT.value)
    p.add_argument("--grid-n", type=int, default=None)
    p.add_argument("--r-max", type=float, default=None)

    return parser


def setup_logging(verbose: bool = False):
    level = logging.DEBUG if verbose else getattr(logging, get_settings().log_level.upper(), logging.INFO)
    logging.basicConfig(
        level=level,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        handlers=[
            logging.StreamHandler(sys.stderr),
        ],
        force=True,
    )


def _single_dim(args) -> int:
    if len(args.dims) != 1:
        raise ValueError(f"{args.command} takes a single dimension (got {args.dims})")
    return args.dims[0]


def dispatch(args, config, output: Optional[str], fmt: OutputFormat, storage: StorageService) -> int:
    if args.command == "spectrum":
        return commands.cmd_spectrum(
            config, args.n_max, TableLayout(args.layout), args.dims, args.l_max,
            args.physical_only, args.diff_paper, output, fmt, storage,
        )
    if args.command == "potential":
        return commands.cmd_potential(
            config, Family(args.family), args.r_min, args.r_max, args.samples, output, fmt, storage,
        )
    if args.command == "effective":
        return commands.cmd_effective(
            config, args.l, _single_dim(args), args.schemes, args.r_min, args.r_max, args.samples,
            output, fmt, storage,
        )
    if args.command == "wavefunction":
        return commands.cmd_wavefunction(
            config, args.n, args.l, _single_dim(args), args.r_min, args.r_max, args.samples,
            args.normalize, args.allow_spurious, output, fmt, storage,
        )
    if args.command == "validate":
        return commands.cmd_validate(
            config, args.n, args.l, _single_dim(args), CentrifugalScheme(args.scheme),
            args.grid_n, args.r_max, output, storage,
        )
    raise ValueError(f"Unknown command: {args.command}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(args.verbose)

    try:
        overrides = dict(parse_override(item) for item in args.overrides)
        for key in PARAMETER_FLAGS:
            value = getattr(args, f"param_{key}")
            if value is not None:
                overrides[key] = value
        config = load_config(args.config, overrides)

        output = args.output or config.output
        fmt = OutputFormat(args.format or config.format or OutputFormat.CSV.value)
        logger.info(f"🧭 {args.command} (config={args.config or 'defaults'}, output={output or 'stdout'})")

        storage = StorageService()
        code = dispatch(args, config, output, fmt, storage)

        if args.metadata and output:
            arguments = {k: v for k, v in vars(args).items() if not k.startswith("param_")}
            storage.save_metadata(output, args.command, arguments, config.model_dump(by_alias=True))
        return code

    except ConfigError as e:
        logger.error(f"❌ Invalid configuration: {e}")
        return commands.EXIT_INVALID
    except ValueError as e:
        logger.error(f"❌ Invalid input: {e}")
        return commands.EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
