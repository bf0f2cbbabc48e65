from __future__ import annotations

import pytest

from mrdial import BumpyGeometry, default_config


@pytest.fixture(scope="session")
def cfg():
    return default_config()


@pytest.fixture(scope="session")
def smooth_geom():
    return BumpyGeometry(
        r0=10e-3,
        n_teeth=0,
        tooth_h=2.5e-3,
        tooth_w=4e-3,
        g_r=0.5e-3,
        g_a=0.5e-3,
        l_eng=5e-3,
        housing_r=30e-3,
    )
