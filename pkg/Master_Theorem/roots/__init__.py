"""
근계 모듈 패키지.
제한 근계, Weyl 군, 튜브 영역, 공간 카탈로그를 제공합니다.
"""

from .root_system import (
    RootDatum, SpectralPoint, DominantWeight, RhoData,
    build_root_system, multiplicity_case
)
from .tubes import TubeKind, tube_membership, tube_mask, weyl_tube_intersections
from .catalog import build_catalog_space, list_catalog_spaces, load_catalog, catalog_entry
