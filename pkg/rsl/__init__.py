"""RSL (Riemann Spectral Lab) 패키지.

리만 영점 계산과 스펙트럴 접근법(명시 공식, GUE 통계, xp/Landau 모델)의
수치 검증 도구입니다.
"""

__version__ = "0.1.0"
