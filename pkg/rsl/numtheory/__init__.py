"""정수론 패키지.

소수 체, 제타 함수 평가기, 영점 탐색 및 영점 테이블 캐시 모듈을 포함합니다.
"""
