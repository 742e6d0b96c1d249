#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:config.py
@time:2026/10/12
"""
from typing import Union
from pathlib import Path
import os
import sys

# rough memory footprint of one memo entry (key tuple + sparse polynomial)
_ENTRY_BYTES = 512


def _env_cache_mb(default: int = 1024) -> int:
    value = os.environ.get('SUPERKOSTKA_CACHE_MB')
    if value is None or not value.strip():
        return default
    try:
        mb = int(value)
    except ValueError:
        print(f'SUPERKOSTKA_CACHE_MB={value!r} is not an integer, fall back to {default}.', file=sys.stderr)
        return default
    return max(mb, 1)


class SuperKostkaConfig(object):
    """
    config of superkostka.
    """

    def __init__(
            self,
            n_jobs: int = 1,
            log_file: Union[str, Path, None] = None,
            log_level: str = "info",
            log_format: str = "%(asctime)s %(name)s %(levelname)s: %(message)s",
            weyl_cap: int = 10 ** 7,
            cache_mb: Union[int, None] = None,
            shared_cache: bool = False,
    ):
        self._n_jobs = n_jobs
        self._log_file = log_file
        self._log_level = log_level
        self._log_format = log_format
        self._weyl_cap = weyl_cap
        self._cache_mb = cache_mb if cache_mb is not None else _env_cache_mb()
        self._shared_cache = shared_cache

    @property
    def log_file(self) -> Union[str, Path, None]:
        """
        get the file path of log.
        :return:
        """
        return self._log_file

    @log_file.setter
    def log_file(self, value):
        """
        set file path of log.
        :param value: value of log file path
        :return:
        """
        if value:
            dir_path = os.path.dirname(os.path.abspath(value))
            if not os.path.exists(dir_path):
                raise FileExistsError("folder does not exist, please check!")
        self._log_file = value
        self._reset_logger()

    @property
    def log_format(self) -> str:
        """
        get the format of log.
        :return:
        """
        return self._log_format

    @log_format.setter
    def log_format(self, value):
        self._log_format = value

    @property
    def log_level(self) -> str:
        """
        get log level
        :return:
        """
        return self._log_level

    @log_level.setter
    def log_level(self, value):
        """
        set log level
        :param value: the value of log level
        :return:
        """
        if value.lower() not in ['info', 'warning', 'debug', 'error', 'critical']:
            print('the log level is out of range, please check and it is not modified.', file=sys.stderr)
        else:
            self._log_level = value.lower()
            self._reset_logger()

    @property
    def n_jobs(self) -> int:
        """
        number of workers used by the alternating sums over the Weyl group, -1 means all cores.
        :return:
        """
        return self._n_jobs

    @n_jobs.setter
    def n_jobs(self, value):
        if not isinstance(value, int) or value == 0 or value < -1:
            raise ValueError(f'n_jobs should be a positive integer or -1, got {value}, please check.')
        self._n_jobs = value

    @property
    def weyl_cap(self) -> int:
        """
        the largest Weyl group that may be materialized.
        :return:
        """
        return self._weyl_cap

    @weyl_cap.setter
    def weyl_cap(self, value):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f'weyl_cap should be a positive integer, got {value}, please check.')
        self._weyl_cap = value

    @property
    def cache_mb(self) -> int:
        """
        memory budget of the partition memo tables, in MiB.
        :return:
        """
        return self._cache_mb

    @cache_mb.setter
    def cache_mb(self, value):
        if not isinstance(value, int) or value < 1:
            raise ValueError(f'cache_mb should be a positive integer, got {value}, please check.')
        self._cache_mb = value

    @property
    def cache_entries(self) -> int:
        """
        memo budget expressed as a number of entries.
        :return:
        """
        return max(self._cache_mb * 1024 * 1024 // _ENTRY_BYTES, 1024)

    @property
    def shared_cache(self) -> bool:
        """
        share one synchronized memo between all queries and workers if True (default `False`).
        :return:
        """
        return self._shared_cache

    @shared_cache.setter
    def shared_cache(self, value):
        self._shared_cache = bool(value)

    def _reset_logger(self):
        from .log_manager import reset_logger
        reset_logger()


sk_conf = SuperKostkaConfig()
