from PyPcCycles.mylib.algebra.sz_params import SZParams
from PyPcCycles.mylib.algebra.tutte_sample import DEFAULT_BATCH_ELEMENTS
from PyPcCycles.mylib.config.serializable_config import SerializableConfig
from PyPcCycles.pc_cycle_detect import DEFAULT_EXTRACTION_RETRIES


class PcCycleParams(SerializableConfig):
    """
    Represents the application configuration.
    Defaults are overridden by the user's configuration file and then by command-line flags.
    """

    def __init__(self):
        super().__init__()

        # Randomized identity test
        self.sz = SZParams()

        # Witness extraction restarts with fresh random streams this many times
        self.extraction_max_retries = DEFAULT_EXTRACTION_RETRIES

        # Matrix entries eliminated together, bounds memory use of batched trials
        self.determinant_batch_elements = DEFAULT_BATCH_ELEMENTS

        self.log_level = 'WARNING'

    def apply_defaults(self) -> None:
        """ Reset all attributes to their default values. """
        self.__init__()
