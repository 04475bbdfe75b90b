#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Numerical tolerances and document constants """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
SCHEMA = 'gclink/1'

# algebraic identities (norms, real parts, orthogonality)
ALGEBRA_TOL = 1e-12
# reconstruction of circles and fit residuals
GEOMETRY_TOL = 1e-9
# |det| of the stacked bases below which two planes count as meeting
TRANSVERSE_TOL = 1e-9
# circle-circle tangency on S^2
TANGENCY_TOL = 1e-7
# distance of a Gauss integral from the nearest integer
GAUSS_TOL = 0.1

GAUSS_SAMPLES = 1000
PROJECTION_SAMPLES = 64
PROBE_POINTS = 256
# torus sum stopping margin on w^2 + x^2
TORUS_MARGIN = 2 ** -0.5
TORUS_FLOW_RATE = 0.8
TORUS_FLOW_MAX_STEPS = 400
