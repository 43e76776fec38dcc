from pathlib import Path

from PyPcCycles.mylib.config.config_path_manager import ConfigPathManager


def test_paths(mocker):
    user_data_dir = mocker.patch('appdirs.user_data_dir', return_value='/home/someone/.local/share/PyPcCycles')
    manager = ConfigPathManager('PyPcCycles', 'pc-cycles', app_specific_path='/opt/fixtures')

    user_data_dir.assert_called_once_with('PyPcCycles', 'pc-cycles')
    assert manager.app_name == 'PyPcCycles'
    assert manager.user_specific_path == Path('/home/someone/.local/share/PyPcCycles')
    assert manager.app_specific_path == Path('/opt/fixtures')


def test_without_app_specific_path():
    assert ConfigPathManager('PyPcCycles', 'pc-cycles').app_specific_path is None
