"""물리 모델 패키지.

xp 해밀토니안, Landau 모델 동역학 및 경계 양자화 스펙트럼 모듈을 포함합니다.
"""
