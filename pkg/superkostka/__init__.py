#!/usr/bin/env python3
# coding: utf-8

from .config import SuperKostkaConfig, sk_conf
from .log_manager import logger
from . import core
from . import algorithm
from . import io
from . import tools

__version__ = '0.1.0'
