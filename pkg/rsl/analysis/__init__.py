"""해석 패키지.

특수 함수, 구적법, 스펙트럼 통계, 트레이스/명시 공식 모듈을 포함합니다.
"""
