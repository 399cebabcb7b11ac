from app.src.core.ui import EngineUI, default_ui
from app.utils.constants import BASES, GRAPH_FORMATS
import argparse
import sys


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a value >= 1, got {value}")
    return value


class ArgsParser(argparse.ArgumentParser):
    """Parses CLI flags with custom UI error reporting"""

    def __init__(self, ui: EngineUI | None = None, **kwargs):
        kwargs.setdefault("prog", "cliffock")
        super().__init__(**kwargs)
        self.ui = ui or default_ui

    def error(self, message):
        usage = self.format_usage()
        self.ui.error(f"{message}\n{usage}")
        sys.exit(2)

    @classmethod
    def build(cls, ui: EngineUI | None = None) -> "ArgsParser":
        parser = cls(
            ui,
            description="Exact Clifford algebra Cl(m,m) in the Extended Fock Basis",
        )
        commands = parser.add_subparsers(
            dest="command", required=True, metavar="COMMAND", parser_class=cls
        )

        mul = commands.add_parser(
            "mul", ui=parser.ui, help="Multiply two multivector expressions"
        )
        mul.add_argument("--m", type=_positive_int, required=True, help="Number of generator pairs")
        mul.add_argument("--basis", choices=BASES, default="auto", help="Basis of the operands")
        mul.add_argument(
            "--count-mults",
            action="store_true",
            help="Also print the number of scalar multiplications",
        )
        mul.add_argument("left", help="Left operand, e.g. '1*q'")
        mul.add_argument("right", help="Right operand, e.g. '1*p'")

        convert = commands.add_parser(
            "convert", ui=parser.ui, help="Rewrite an expression in the other basis"
        )
        convert.add_argument("--m", type=_positive_int, required=True, help="Number of generator pairs")
        convert.add_argument("--basis", choices=BASES, default="auto", help="Basis of the input")
        convert.add_argument("--to", choices=("efb", "gamma"), required=True, help="Target basis")
        convert.add_argument("expr", help="Expression to convert")

        for name, text in (
            ("mis", "Independence number and maximum independent sets"),
            ("clique", "Clique number and maximum cliques"),
        ):
            graph = commands.add_parser(name, ui=parser.ui, help=text)
            graph.add_argument("file", help="Graph file")
            graph.add_argument(
                "--format", choices=GRAPH_FORMATS, default="dimacs", help="Graph file format"
            )
            graph.add_argument(
                "--max-k", type=_positive_int, default=None, help="Highest power of O to compute"
            )
            graph.add_argument(
                "--oracle",
                action="store_true",
                help="Cross-check against brute-force subset enumeration",
            )
            if name == "mis":
                graph.add_argument(
                    "--complement", action="store_true", help="Work on the complement graph"
                )

        tables = commands.add_parser(
            "tables", ui=parser.ui, help="Dump the slot table, H_m, P_m or the permuted gamma order"
        )
        which = tables.add_mutually_exclusive_group()
        which.add_argument("--slot-table", action="store_true", help="The 4x4 slot product table (default)")
        which.add_argument("--hadamard", action="store_true", help="H_m")
        which.add_argument("--perm", action="store_true", help="P_m")
        which.add_argument(
            "--permuted-order", action="store_true", help="Gamma basis reordered by P_m"
        )
        tables.add_argument("--m", type=_positive_int, default=1, help="Number of generator pairs")

        bench = commands.add_parser(
            "bench", ui=parser.ui, help="Count multiplications of dense products"
        )
        bench.add_argument("--m", type=_positive_int, required=True, help="Number of generator pairs")
        bench.add_argument("--seed", type=int, default=None, help="Random seed")
        bench.add_argument(
            "--float", action="store_true", help="Use float coefficients instead of exact ones"
        )

        verify = commands.add_parser(
            "verify", ui=parser.ui, help="Check EFB products against the gamma basis"
        )
        verify.add_argument("--m", type=_positive_int, required=True, help="Number of generator pairs")
        verify.add_argument("--seed", type=int, default=None, help="Random seed")
        verify.add_argument(
            "--samples", type=_positive_int, default=None, help="Random pairs when m > 3"
        )
        return parser

    @classmethod
    def get_args(cls, ui: EngineUI | None = None, user_args: list[str] = None) -> argparse.Namespace:
        """Return parsed args using this parser subclass"""
        parser = cls.build(ui)
        return parser.parse_args(user_args)
