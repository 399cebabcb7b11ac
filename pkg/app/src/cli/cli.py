from app.src.algebra.algebra_errors import ExpressionParseError
from app.src.algebra.efb import EfbMultivector, EfbSymbol, slot_table
from app.src.algebra.efb import mv_product as efb_product
from app.src.algebra.gamma import GammaMultivector
from app.src.algebra.gamma import mv_product as gamma_product
from app.src.algebra.scalar import MultiplicationCounter
from app.src.algebra.transform import (
    efb_to_gamma,
    format_matrix,
    gamma_to_efb,
    hadamard,
    perm,
    permuted_gamma_order,
)
from app.src.bench.bench import dense_product_counts, format_key_values, format_report
from app.src.bench.verification import run_oracle_sweep
from app.src.graphs.graph import Graph, load_graph
from app.src.graphs.independence import power_sequence, sets_in_power
from app.src.graphs.oracle import brute_force_mis
from app.src.core.exception_handler import (
    EXIT_FAILURE,
    EXIT_OK,
    EXIT_USAGE,
    CommandExceptionHandler,
)
from app.src.core.config import EngineConfig
from app.src.core.ui import EngineUI, default_ui
from app.src.helpers.valid_path import validate_input_file
from app.src.cli.flags import ArgsParser
from app.utils.ui_messages import UI_MESSAGES
import argparse
import errno
import logging
import os


logger = logging.getLogger(__name__)


def detect_basis(text: str) -> str | None:
    """'gamma' if any monomial is written with g tokens or as a bare 1, None for 0."""
    text = text.strip()
    if text == "0":
        return None
    for term in text.split(" + "):
        _, _, tokens = term.strip().partition("*")
        for token in tokens.split():
            if token == "1" or token.lower().startswith("g"):
                return "gamma"
    return "efb"


def parse_expression(text: str, m: int, basis: str):
    match basis:
        case "gamma":
            return GammaMultivector.parse(text, m)
        case "efb":
            return EfbMultivector.parse(text, m)
        case _:
            raise ExpressionParseError(f"Unknown basis: {basis}")


def format_vertex_set(vertices) -> str:
    return "{" + ",".join(str(v) for v in sorted(vertices)) + "}"


class CLI:
    """Batch command-line front end: one command per invocation."""

    def __init__(
        self,
        config: EngineConfig | None = None,
        ui: EngineUI | None = None,
        propagate: bool = False,
    ):
        self.config = config or EngineConfig()
        self.ui = ui or default_ui
        self.propagate = propagate

    def run(self, argv: list[str] | None = None) -> int:
        args = ArgsParser.get_args(self.ui, argv)
        logger.debug("running %s", args.command)
        return CommandExceptionHandler.handle_command_exceptions(
            lambda: self.dispatch(args),
            self.ui,
            propagate=self.propagate,
        )

    def dispatch(self, args: argparse.Namespace) -> int:
        match args.command:
            case "mul":
                return self.handle_mul(args)
            case "convert":
                return self.handle_convert(args)
            case "mis":
                return self.handle_graph(args, complement=args.complement, label="alpha")
            case "clique":
                return self.handle_graph(args, complement=True, label="omega")
            case "tables":
                return self.handle_tables(args)
            case "bench":
                return self.handle_bench(args)
            case "verify":
                return self.handle_verify(args)
            case _:
                self.ui.error(UI_MESSAGES["errors"]["no_command"])
                return EXIT_USAGE

    ########### algebra ###########

    def _resolve_basis(self, basis: str, *texts: str) -> str:
        if basis != "auto":
            return basis
        found = {b for b in (detect_basis(t) for t in texts) if b is not None}
        if len(found) > 1:
            raise ExpressionParseError(UI_MESSAGES["errors"]["mixed_basis"])
        return found.pop() if found else "efb"

    def handle_mul(self, args: argparse.Namespace) -> int:
        basis = self._resolve_basis(args.basis, args.left, args.right)
        left = parse_expression(args.left, args.m, basis)
        right = parse_expression(args.right, args.m, basis)

        counter = MultiplicationCounter(enabled=args.count_mults)
        product = gamma_product if basis == "gamma" else efb_product
        result = product(left, right, counter)

        self.ui.result(str(result))
        if args.count_mults:
            self.ui.result(f"mults = {counter.count}")
        return EXIT_OK

    def handle_convert(self, args: argparse.Namespace) -> int:
        basis = self._resolve_basis(args.basis, args.expr)
        value = parse_expression(args.expr, args.m, basis)
        if basis == args.to:
            self.ui.result(str(value))
        elif args.to == "efb":
            self.ui.result(str(gamma_to_efb(value)))
        else:
            self.ui.result(str(efb_to_gamma(value)))
        return EXIT_OK

    ########### graphs ###########

    def _load(self, path: str, fmt: str) -> Graph:
        if not validate_input_file(path):
            raise FileNotFoundError(errno.ENOENT, os.strerror(errno.ENOENT), path)
        graph = load_graph(path, fmt)
        self.ui.info(
            UI_MESSAGES["messages"]["loaded_graph"].format(graph.m, len(graph.edges()))
        )
        return graph

    def handle_graph(self, args: argparse.Namespace, complement: bool, label: str) -> int:
        graph = self._load(args.file, args.format)
        if complement:
            graph = graph.complement()
            logger.info(UI_MESSAGES["messages"]["using_complement"])

        # the last nonzero power is O^alpha; its q slots list the maximum sets
        alpha, last = 0, None
        for k, value in power_sequence(graph, args.max_k):
            if value.is_zero():
                break
            alpha, last = k, value

        if args.max_k is not None and alpha == args.max_k < graph.m:
            self.ui.warning(UI_MESSAGES["messages"]["max_k_reached"].format(alpha))

        self.ui.result(f"{label} = {alpha}")
        if args.oracle:
            self.ui.result(f"oracle = {brute_force_mis(graph, self.config.oracle_limit)}")
        sets = sets_in_power(last) if last is not None else set()
        for vertices in sorted(sets, key=sorted):
            self.ui.result(format_vertex_set(vertices))
        return EXIT_OK

    ########### tables ###########

    def handle_tables(self, args: argparse.Namespace) -> int:
        if args.hadamard:
            self.ui.result(format_matrix(hadamard(args.m)))
        elif args.perm:
            self.ui.result(format_matrix(perm(args.m)))
        elif args.permuted_order:
            self.ui.lines([str(monomial) for monomial in permuted_gamma_order(args.m)])
        else:
            self.ui.lines(self._slot_table_lines())
        return EXIT_OK

    def _slot_table_lines(self) -> list[str]:
        """Rows are the left factor, columns the right one; 0 marks a zero product."""
        width = 3
        cells = [["*"] + [s.token for s in EfbSymbol]]
        for left, row in zip(EfbSymbol, slot_table()):
            cells.append([left.token] + ["0" if r is None else r.token for r in row])
        return [" ".join(c.ljust(width) for c in row).rstrip() for row in cells]

    ########### bench ###########

    def handle_bench(self, args: argparse.Namespace) -> int:
        seed = self.config.default_seed if args.seed is None else args.seed
        mode = "float" if args.float else self.config.scalar_mode
        report = dense_product_counts(
            args.m,
            seed=seed,
            mode=mode,
            gamma_limit=self.config.gamma_bench_limit,
            efb_limit=self.config.efb_bench_limit,
            table_limit=self.config.table_limit,
        )
        if report.dense_gamma_mults is None:
            self.ui.warning(
                UI_MESSAGES["messages"]["gamma_skipped"].format(args.m, self.config.gamma_bench_limit)
            )
        if report.table_nonzero is None:
            self.ui.warning(
                UI_MESSAGES["messages"]["table_skipped"].format(args.m, self.config.table_limit)
            )
        self.ui.result(format_report(report))
        self.ui.result("")
        self.ui.result(format_key_values(report))
        return EXIT_OK

    def handle_verify(self, args: argparse.Namespace) -> int:
        seed = self.config.default_seed if args.seed is None else args.seed
        samples = self.config.verify_samples if args.samples is None else args.samples
        report = run_oracle_sweep(
            args.m,
            seed=seed,
            samples=samples,
            table_limit=self.config.table_limit,
            efb_limit=self.config.efb_bench_limit,
        )
        for check in report.checks:
            status = "ok" if check.passed else "FAIL"
            self.ui.result(f"{check.name}: {status} ({check.checked} checked, {check.failures} failed)")
            if check.detail:
                self.ui.result(f"  first failure: {check.detail}")

        total = len(report.checks)
        if report.passed:
            self.ui.status_message(
                title=UI_MESSAGES["titles"]["verify"],
                message=UI_MESSAGES["messages"]["verify_passed"].format(total, args.m),
                style="success",
            )
            return EXIT_OK
        self.ui.error(
            UI_MESSAGES["messages"]["verify_failed"].format(len(report.failed), total, args.m)
        )
        return EXIT_FAILURE
