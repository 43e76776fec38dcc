"""
Command-line front end for detecting properly colored (PC) cycles in edge-colored multigraphs.

Key functionalities:
- Decides whether a graph has a PC cycle, an odd PC cycle or a PC closed walk, and extracts an odd
  PC cycle as a witness.
- Classifies the perfect matchings of an uncolored graph by the parity of their intersection with
  an edge set, and decides odd dicycle existence in digraphs.
- Writes a human-readable or a JSON report to stdout. The exit code carries the answer:
  0 = no, 1 = yes, 2 = usage, input or configuration error, 3 = witness extraction failed.

Graph arguments are file paths, `-` for stdin, or `@name` for a bundled fixture.
"""
# Standard library and third-party imports
import argparse
import logging
import sys
import time
from pathlib import Path
from typing import *

import colorama

# Ensure the package root is in sys.path so that the local modules can be imported when the script is run directly
current_dir = Path(__file__).resolve().parent
sys.path.insert(0, str(current_dir.parent))

# Local modules - libraries
from PyPcCycles.mylib.algebra.prime_field import FieldError
from PyPcCycles.mylib.algebra.sz_params import ParamsError, small_prime_for
from PyPcCycles.mylib.config.config_path_manager import ConfigPathManager
from PyPcCycles.mylib.config.dict_text_storage import DictTextFileStorage
from PyPcCycles.mylib.config.json_file_storage import JsonFileStorage
from PyPcCycles.mylib.config.storage import StorageError, StorageItemNotFoundError
from PyPcCycles.mylib.graph.gadget import build_gadget_graph
from PyPcCycles.mylib.graph.graph_text_format import *
from PyPcCycles.mylib.graph.graph_types import EdgeColoredMultigraph, GraphError
from PyPcCycles.mylib.graph.monochromatic_reduction import reduce_monochromatic
from PyPcCycles.mylib.oracle.brute_force import (OracleSizeLimitError, enumerate_pc_cycles, has_odd_pc_cycle,
                                                 has_pc_cycle, pc_cycle_subgraph_sizes)
from PyPcCycles.mylib.python_utils.format_exception import format_error_message, format_exception_ansi_colors

# Local modules - application
from PyPcCycles.pc_cycle_detect import *
from PyPcCycles.pc_cycle_params import PcCycleParams
from PyPcCycles.pc_cycle_report import RunReport, input_digest
from PyPcCycles.pc_cycle_resources import fixtures_path
from PyPcCycles.pc_cycle_types import Answer, ParityClass

CONFIG_FILE_NAME = 'pc_cycles_config.json'
FIXTURE_PREFIX = '@'

EXIT_NO = 0
EXIT_YES = 1
EXIT_USAGE = 2
EXIT_RANDOMNESS_FAILURE = 3

logger = logging.getLogger(__name__)

#---------------------------------------------------------------------------------------------------------------------------------------------

class UsageError(Exception):
    """Exception raised for unusable command-line input, reported with exit code 2."""


class PcCycleApp:

    def __init__(self, config_directory: Optional[Path] = None):
        """
        Sets basic application constants.

        Args:
            config_directory: Directory of the user configuration file, defaults to the per-user data directory.
        """
        self.app_name = 'PyPcCycles'
        self.app_author = 'pc-cycles'

        self.path_manager = ConfigPathManager(self.app_name, self.app_author, app_specific_path=fixtures_path())
        self.config_directory = Path(config_directory) if config_directory is not None else self.path_manager.user_specific_path

        # Initialized in run()
        self.params = None
        self.args = None


    def setup_logging(self, level: Union[int, str]) -> None:

        # stdout carries the report only
        logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s', stream=sys.stderr, force=True)


    def add_common_arguments(self, parser: argparse.ArgumentParser, with_defaults: bool = True) -> None:
        """
        Add the flags accepted both before and after the command. Without defaults, a flag that is not
        given after the command keeps the value parsed before it.
        """
        def default(value):
            return value if with_defaults else argparse.SUPPRESS

        parser.add_argument('--json', action='store_true', default=default(False), help='write the report as JSON')
        parser.add_argument('--seed', type=int, default=default(None),
                            help='seed of all random streams (fresh entropy if omitted)')
        parser.add_argument('--trials', type=int, default=default(None), help='number of independent determinant trials')
        prime_group = parser.add_mutually_exclusive_group()
        prime_group.add_argument('--prime', type=int, default=default(None),
                                 help='prime modulus of the field (default 2^61 - 1)')
        prime_group.add_argument('--small-prime', action='store_true', default=default(False),
                                 help='use the smallest prime above 4 times the matrix dimension')
        parser.add_argument('--config', metavar='FILE', default=default(None),
                            help='JSON configuration file to use instead of the user file')
        parser.add_argument('-v', '--verbose', action='count', default=default(0),
                            help='log INFO (-v) or DEBUG (-vv) to stderr')


    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog='pc-cycle',
            description='Detect properly colored cycles in edge-colored multigraphs. '
                        'Exit codes: 0 = no, 1 = yes, 2 = error, 3 = witness extraction failed.')
        self.add_common_arguments(parser)

        common = argparse.ArgumentParser(add_help=False)
        self.add_common_arguments(common, with_defaults=False)

        commands = parser.add_subparsers(dest='command', required=True, metavar='COMMAND')

        def add_command(name: str, summary: str) -> argparse.ArgumentParser:
            return commands.add_parser(name, help=summary, parents=[common])

        graph_help = 'edge-colored graph file, - for stdin, or @fixture'

        command = add_command('exists', 'does the graph have a PC cycle?')
        command.add_argument('graph', help=graph_help)
        command.add_argument('--oracle', action='store_true', help='cross-check with brute force')
        command.set_defaults(handler=self.command_exists)

        command = add_command('odd', 'does the graph have an odd PC cycle?')
        command.add_argument('graph', help=graph_help)
        command.add_argument('--oracle', action='store_true', help='cross-check with brute force')
        command.set_defaults(handler=self.command_odd)

        command = add_command('find-odd', 'find an odd PC cycle')
        command.add_argument('graph', help=graph_help)
        command.set_defaults(handler=self.command_find_odd)

        command = add_command('closed-walk', 'does the graph have a PC closed walk?')
        command.add_argument('graph', help=graph_help)
        command.set_defaults(handler=self.command_closed_walk)

        command = add_command('matching-parity', 'E0-parities of the perfect matchings of an uncolored graph')
        command.add_argument('graph', help='uncolored graph file, - for stdin, or @fixture')
        command.add_argument('--e0', metavar='EDGES',
                             help="edge set E0 as 'u,v u,v ...' or 'u v u v ...' (default: the edges annotated e2)")
        command.add_argument('--want', choices=['odd', 'even'],
                             help='exit 1 iff a perfect matching of this E0-parity exists')
        command.set_defaults(handler=self.command_matching_parity)

        command = add_command('odd-dicycle', 'does the digraph have an odd directed cycle?')
        command.add_argument('graph', help='digraph file, - for stdin, or @fixture')
        command.set_defaults(handler=self.command_odd_dicycle)

        command = add_command('gadget-dump', 'write the gadget graph with E2 edges annotated')
        command.add_argument('graph', help=graph_help)
        command.set_defaults(handler=self.command_gadget_dump)

        command = add_command('oracle', 'brute-force PC cycle listing (small graphs only)')
        command.add_argument('graph', help=graph_help)
        command.set_defaults(handler=self.command_oracle)

        return parser


    def run(self, argv: Optional[Sequence[str]] = None) -> int:
        """
        Parse the command line, execute the command and write its report.

        Returns:
            The exit code.
        """
        colorama.just_fix_windows_console()
        try:
            self.args = self.build_parser().parse_args(argv)
        except SystemExit as e:
            return EXIT_USAGE if e.code else EXIT_NO

        self.setup_logging(self._verbosity_level() or logging.WARNING)
        logger.debug('App started.')

        try:
            self.load_config(self.args.config)
            self.apply_arguments(self.args)

            start_time = time.perf_counter()
            report, exit_code = self.args.handler()
            if report is not None:
                report.wall_time = round(time.perf_counter() - start_time, 6)
                sys.stdout.write(report.to_json() if self.args.json else report.to_text())
            return exit_code

        except RandomnessFailureError as e:
            self.report_error(e)
            return EXIT_RANDOMNESS_FAILURE
        except (UsageError, GraphError, StorageError, ParamsError, FieldError, OracleSizeLimitError, OSError) as e:
            self.report_error(e)
            return EXIT_USAGE


    def report_error(self, e: BaseException) -> None:
        if logger.isEnabledFor(logging.DEBUG):
            logger.debug(format_exception_ansi_colors(e))
        print(format_error_message(str(e), color=sys.stderr.isatty()), file=sys.stderr)


    def _verbosity_level(self) -> Optional[int]:
        if self.args.verbose >= 2:
            return logging.DEBUG
        if self.args.verbose == 1:
            return logging.INFO
        return None


    def load_config(self, config_file: Optional[str] = None) -> None:
        """
        Loads the application configuration, from `config_file` if given, otherwise from the user
        configuration file if it exists.

        Raises:
            UsageError: If an explicitly given configuration file cannot be loaded.
        """
        self.params = PcCycleParams()

        if config_file is not None:
            path = Path(config_file)
            logging.info(f'Loading configuration from "{path}"')
            try:
                data = JsonFileStorage(path.parent, create=False).load(path.name)
            except StorageError as e:
                raise UsageError(f"Cannot load configuration file {path}: {e}") from e
            self.params.merge_dict(data)
        else:
            logging.info(f'Loading configuration from {CONFIG_FILE_NAME} in directory "{self.config_directory}"')
            try:
                data = JsonFileStorage(self.config_directory, create=False).load(CONFIG_FILE_NAME)
                self.params.merge_dict(data)
            except StorageItemNotFoundError:
                logging.info("No configuration file found. Using default values.")
            except StorageError as e:
                logging.error(f"Failed to load configuration: {e}. Using default values.")

        if self._verbosity_level() is None:
            try:
                logging.getLogger().setLevel(str(self.params.log_level).upper())
            except ValueError:
                logging.warning(f"Unknown log level {self.params.log_level!r} in configuration, keeping WARNING")

        logging.debug(f"PcCycleParams:\n{self.params.to_dict()}")


    def apply_arguments(self, args: argparse.Namespace) -> None:
        """ Override the configuration with command-line flags and fix the seed. """
        # the parser only sees the two flags together when both are on the same side of the command
        if args.prime is not None and args.small_prime:
            raise UsageError("--prime and --small-prime cannot be combined")
        sz = self.params.sz
        if args.seed is not None:
            sz.seed = args.seed
        if args.trials is not None:
            sz.trials = args.trials
        if args.prime is not None:
            sz.prime = args.prime
        self.params.sz = sz.resolved().validate()


    def load_input(self, argument: str) -> bytes:
        """
        Read a graph argument: a file path, `-` for stdin, or `@name` for a bundled fixture.

        Raises:
            StorageItemNotFoundError: For an unknown fixture.
            OSError: If the file cannot be read.
        """
        if argument.startswith(FIXTURE_PREFIX):
            fixtures = DictTextFileStorage(self.path_manager.app_specific_path, pattern='*.*')
            return fixtures.load(argument[len(FIXTURE_PREFIX):]).encode('utf-8')
        if argument == '-':
            return sys.stdin.buffer.read()
        return Path(argument).read_bytes()


    def sz_for_dimension(self, dimension: int):
        """ The randomness parameters, with the small prime for `dimension` if requested. """
        if self.args.small_prime:
            return self.params.sz.replace(prime=small_prime_for(dimension)).validate()
        return self.params.sz


    def gadget_dimension(self, graph: EdgeColoredMultigraph) -> int:
        return len(build_gadget_graph(reduce_monochromatic(graph)).graph)


    def oracle_answer(self, oracle: Callable[[], bool]) -> str:
        try:
            return Answer.of(oracle()).name.lower()
        except OracleSizeLimitError as e:
            logging.warning(f"Brute-force cross-check skipped: {e}")
            return 'unavailable'

    # Commands return (report, exit code)

    def command_exists(self) -> Tuple[RunReport, int]:
        data = self.load_input(self.args.graph)
        graph = parse_graph(data)
        decision = pc_cycle_exists(graph)
        report = RunReport.from_decision('exists', data, decision, self.params.sz)
        if self.args.oracle:
            report.oracle_answer = self.oracle_answer(lambda: has_pc_cycle(graph))
        return report, EXIT_YES if decision.answer else EXIT_NO


    def command_odd(self) -> Tuple[RunReport, int]:
        data = self.load_input(self.args.graph)
        graph = parse_graph(data)
        sz = self.sz_for_dimension(self.gadget_dimension(graph))
        decision = odd_pc_cycle_exists(graph, sz, self.params.determinant_batch_elements)
        report = RunReport.from_decision('odd', data, decision, sz)
        if self.args.oracle:
            report.oracle_answer = self.oracle_answer(lambda: has_odd_pc_cycle(graph))
        return report, EXIT_YES if decision.answer else EXIT_NO


    def command_find_odd(self) -> Tuple[RunReport, int]:
        data = self.load_input(self.args.graph)
        graph = parse_graph(data)
        sz = self.sz_for_dimension(self.gadget_dimension(graph))
        decision = find_odd_pc_cycle_decision(graph, sz, self.params.extraction_max_retries,
                                              self.params.determinant_batch_elements)
        return RunReport.from_decision('find-odd', data, decision, sz), EXIT_YES if decision.answer else EXIT_NO


    def command_closed_walk(self) -> Tuple[RunReport, int]:
        data = self.load_input(self.args.graph)
        decision = pc_closed_walk_exists(parse_graph(data))
        return RunReport.from_decision('closed-walk', data, decision, self.params.sz), EXIT_YES if decision.answer else EXIT_NO


    def command_matching_parity(self) -> Tuple[RunReport, int]:
        data = self.load_input(self.args.graph)
        graph, annotated = parse_uncolored_graph(data)
        e0 = parse_edge_list(self.args.e0) if self.args.e0 is not None else annotated

        sz = self.sz_for_dimension(len(graph))
        decision = parity_matching_decide(graph, e0, sz, self.params.determinant_batch_elements)
        report = RunReport.from_decision('matching-parity', data, decision, sz)

        if self.args.want == 'odd':
            found = decision.answer in (ParityClass.ALL_ODD, ParityClass.BOTH_PARITIES)
        elif self.args.want == 'even':
            found = decision.answer in (ParityClass.ALL_EVEN, ParityClass.BOTH_PARITIES)
        else:
            found = decision.answer is not ParityClass.NO_PERFECT_MATCHING
        return report, EXIT_YES if found else EXIT_NO


    def command_odd_dicycle(self) -> Tuple[RunReport, int]:
        data = self.load_input(self.args.graph)
        decision = odd_dicycle_exists(parse_digraph(data))
        return RunReport.from_decision('odd-dicycle', data, decision, self.params.sz), EXIT_YES if decision.answer else EXIT_NO


    def command_gadget_dump(self) -> Tuple[Optional[RunReport], int]:
        data = self.load_input(self.args.graph)
        gadget = build_gadget_graph(reduce_monochromatic(parse_graph(data)))
        text = serialize_uncolored_graph(gadget.graph, gadget.e2_edges)
        if not self.args.json:
            sys.stdout.write(text)
            return None, EXIT_NO

        report = RunReport(command='gadget-dump', input_digest=input_digest(data), answer='dumped', params=self.params.sz,
                           details={'gadget': text,
                                    'gadget_vertices': len(gadget.graph),
                                    'gadget_e1_edges': len(gadget.e1_edges),
                                    'gadget_e2_edges': len(gadget.e2_edges)})
        return report, EXIT_NO


    def command_oracle(self) -> Tuple[RunReport, int]:
        data = self.load_input(self.args.graph)
        graph = parse_graph(data)
        cycles = enumerate_pc_cycles(graph)
        odd = any(cycle.is_odd() for cycle in cycles)

        witnesses = [CycleWitness(cycle) for cycle in cycles]
        report = RunReport(command='oracle', input_digest=input_digest(data), answer=Answer.of(odd).name.lower(),
                           params=self.params.sz, randomized=False,
                           evidence=[w.to_dict() for w in witnesses],
                           evidence_summary=[w.summary() for w in witnesses],
                           details={'pc_cycle_subgraph_sizes': sorted(pc_cycle_subgraph_sizes(graph))})
        return report, EXIT_YES if odd else EXIT_NO


def main() -> None:
    sys.exit(PcCycleApp().run())


if __name__ == "__main__":
    main()
