"""
Hardy 클래스 모듈 패키지.
인증서가 붙은 Hardy 함수, 인증서 검사, Laplace 변환 생성기, 내장 함수를 제공합니다.
"""

from .hardy import HardyFunction, HardyCertificate, CertificateReport, check_certificate, sample_hardy_domain
from .laplace import laplace_hardy, box_transform
from .builtins import (
    exp_decay, reciprocal_gamma, laplace_box, zero_function, sine_counterexample,
    product_hardy, parse_hardy_spec
)
