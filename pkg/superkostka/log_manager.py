#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:log_manager.py
@time:2026/10/12
"""

import logging
from .config import sk_conf


class LogManager(object):
    def __init__(self, log_path=None, level=None):
        self.level_map = {'debug': logging.DEBUG,
                          'info': logging.INFO,
                          'warning': logging.WARNING,
                          'error': logging.ERROR,
                          'critical': logging.CRITICAL}
        self.format = sk_conf.log_format
        self.formatter = logging.Formatter(self.format, "%Y-%m-%d %H:%M:%S")
        self.log_path = log_path if log_path else sk_conf.log_file
        self.level = level.lower() if level else sk_conf.log_level.lower()
        if self.log_path:
            self.handler = logging.FileHandler(self.log_path)
        else:
            self.handler = logging.StreamHandler()
        self.handler.setLevel(self.level_map[self.level])
        self.handler.setFormatter(self.formatter)

    def get_logger(self, name="SuperKostka"):
        """
        get logger object, handlers attached by an earlier call are replaced.
        :param name: logger name
        :return: logger object
        """
        alogger = logging.getLogger(name)
        alogger.propagate = 0
        alogger.setLevel(self.level_map[self.level])
        for handler in list(alogger.handlers):
            alogger.removeHandler(handler)
        alogger.addHandler(self.handler)
        return alogger


def reset_logger(log_path=None, level=None):
    """
    rebuild the package logger after `sk_conf.log_level` or `sk_conf.log_file` changed.
    :param log_path: optional log file
    :param level: optional level name
    :return: logger object
    """
    return LogManager(log_path=log_path, level=level).get_logger(name='SuperKostka')


logger = LogManager().get_logger(name='SuperKostka')
