# coding: utf-8

# Copyright 2026 The qgroups developers
#
#    Use of this source code is governed by the BSD license found in
#    the LICENSE.md file at the root of this repository.

# General imports

import qgroups.hopf as hopf
import qgroups.corep as corep

__version__ = '0.1.0'
