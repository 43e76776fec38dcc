from typing import List
from pathlib import Path
from PyPcCycles.mylib.config.storage import *

class DictTextFileStorage(Storage[str]):
    """
    A storage class that keeps the contents of text files in a dictionary.
    The file names (relative to the base directory, without extension) are the keys.
    Used for the bundled graph fixtures.
    """

    def __init__(self, base_directory: str, pattern: str = '*.txt', recurse: bool = False) -> None:
        """
        Args:
            base_directory (str): The directory where the text files are stored.
            pattern (str, optional): The wildcard pattern to filter files. Defaults to '*.txt'.
            recurse (bool, optional): Whether to load files from sub directories too.
        """
        self.base_directory = Path(base_directory)
        self.storage_dict = {}
        self.load_from_directory(pattern, recurse)

    def load(self, name: str) -> str:
        """
        Return the content of a text file.

        Raises:
            StorageItemNotFoundError: If the specified file is not found.
        """
        if name in self.storage_dict:
            return self.storage_dict[name]
        raise StorageItemNotFoundError(name, "Fixture not found")

    def list(self) -> List[str]:
        return sorted(self.storage_dict.keys())

    def exists(self, name: str) -> bool:
        return name in self.storage_dict

    def load_from_directory(self, pattern: str, recurse: bool) -> None:
        """
        Load all text files matching the pattern from the base directory into the storage dictionary.

        Raises:
            StorageItemListingError: If the directory cannot be read.
        """
        glob_method = self.base_directory.rglob if recurse else self.base_directory.glob
        try:
            for file_path in glob_method(pattern):
                relative_path = file_path.relative_to(self.base_directory).with_suffix('').as_posix()
                self.storage_dict[relative_path] = file_path.read_text(encoding='utf-8')
        except OSError as e:
            raise StorageItemListingError(str(self.base_directory), "Could not read fixture directory") from e
