# -*- coding: utf-8 -*-
"""
Configuration centralisée du laboratoire spectral
"""
