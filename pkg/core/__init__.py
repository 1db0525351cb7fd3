# -*- coding: utf-8 -*-
"""
Noyau du laboratoire spectral : exceptions, configuration d'expérience,
convergence numérique et moteur de balayage
"""
