"""Shipped data assets: the five GAB files, the two square complexes and
the two BMW presentations.  C2LAB_ASSETS overrides the bundled directory.
"""

import os
from importlib import resources

from . import bmw, complexes

GAB_NAMES = ('y1q2', 'y1q3', 'y2q3', 'y3q3', 'y4q3')


def asset_text(filename):
    override = os.environ.get('C2LAB_ASSETS')
    if override:
        with open(os.path.join(override, filename)) as fh:
            return fh.read()
    return resources.files('c2lab.data').joinpath(filename).read_text()


def load_gab(name):
    """One of y1q2, y1q3, ..., y4q3, fully validated."""
    if name not in GAB_NAMES:
        raise ValueError("unknown complex %r (have %s)" % (name, ', '.join(GAB_NAMES)))
    return complexes.load_complex(asset_text(name + '.cplx'), name=name)


def load_square(name):
    """sq_radu or sq_jw."""
    return bmw.loads_square(asset_text(name + '.sqc'), name=name)


def load_bmw(name):
    """gamma_r or gamma_jw."""
    return bmw.loads(asset_text(name + '.bmw'), name=name)


def expected_gon(name):
    """The generalized-polygon orders every shipped GAB must satisfy."""
    return {0: 2, 1: 4, 2: 4}
