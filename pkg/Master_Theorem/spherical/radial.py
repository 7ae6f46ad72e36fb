#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""
동경 변수 H ∈ 𝔞 (복소화 포함)

H 는 h = (ω₁(H), …, ω_l(H)) 로 저장합니다. 그러면
    λ(H) = Σ_j λ_j h_j,   α(H) = Σ_j α_(β_j) h_j,   ‖H‖² = hᵀ G_ω⁻¹ h
계수 1 에서는 t = β(H)/2, 즉 h = 2t 입니다.
"""

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class RadialPoint:
    """동경 점 H (ω 쌍대 좌표 h)"""
    h: tuple

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(complex(v) for v in np.atleast_1d(self.h)))

    @classmethod
    def from_t(cls, t):
        """계수 1: t = β(H)/2"""
        return cls((2.0 * complex(t),))

    @classmethod
    def compact(cls, x):
        """콤팩트 방향 H = iX"""
        return cls(tuple(1j * np.atleast_1d(np.asarray(x, dtype=float))))

    @property
    def array(self):
        return np.asarray(self.h, dtype=complex)

    @property
    def t(self):
        return self.h[0] / 2.0

    @property
    def is_real(self):
        return all(abs(v.imag) == 0 for v in self.h)

    def root_values(self, datum):
        """양근 α 에 대한 α(H)"""
        return datum.root_values(self.array)

    def norm(self, datum):
        """‖Re H‖"""
        return datum.radial_norm(self.array.real)

    def in_closed_omega_pi(self, datum):
        """|α(Im H)| ≤ π/2 (모든 α ∈ Σ)"""
        values = datum.root_values(self.array.imag)
        return bool(np.all(np.abs(values) <= np.pi / 2 + 1e-14))

    def __str__(self):
        return "(" + ", ".join(f"{v.real:.6g}{v.imag:+.6g}j" for v in self.h) + ")"
