"""예외 모듈.

RSL 전체에서 사용하는 예외 및 경고 타입을 정의합니다.
"""


class RslError(Exception):
    """RSL 예외의 최상위 클래스."""


class DomainError(RslError, ValueError):
    """함수의 정의역 밖에서 호출된 경우 (극점, s = 1 등)."""


class EmptyDomainError(DomainError):
    """결과 집합이 정의될 수 없는 입력 (예: 2 미만의 체 한계)."""


class DivergenceDomainError(DomainError):
    """곱 또는 급수가 발산하는 영역 (Re s <= 1)."""


class InsufficientDataError(RslError, ValueError):
    """통계를 계산하기에 표본이 부족한 경우."""


class QuadratureAccuracyError(RslError, ArithmeticError):
    """적응형 구적법이 허용 오차에 수렴하지 못한 경우.

    Attributes:
        estimate: 수렴 실패 시점의 적분 추정값.
        error_estimate: 추정 오차.
    """

    def __init__(self, message: str, estimate: float, error_estimate: float) -> None:
        super().__init__(message)
        self.estimate = estimate
        self.error_estimate = error_estimate


class RegimeError(RslError, ValueError):
    """물리 파라미터가 요구되는 영역(단열 근사 등)을 벗어난 경우."""


class NoSpectrumRegimeError(RegimeError):
    """경계 비율 rho <= 1 이라 이산 스펙트럼이 없는 경우."""


class StabilityError(RslError, ValueError):
    """적분기 시간 간격이 빠른 모드를 해상하지 못하는 경우."""


class CacheFormatError(RslError, ValueError):
    """영점 테이블 캐시 파일 형식이 잘못된 경우."""


class MissedZeroWarning(UserWarning):
    """영점 개수가 매끄러운 계수 함수와 허용 범위 이상 어긋난 경우.

    Attributes:
        interval: 문제가 된 높이 구간 (하한, 상한).
        found: 구간 상한 아래에서 찾은 영점 수.
        expected: round(theta(T)/pi + 1) 값.
    """

    def __init__(
        self,
        interval: tuple[float, float],
        found: int,
        expected: int,
    ) -> None:
        super().__init__(
            f"zero count {found} below T={interval[1]:.6g} differs from "
            f"expected {expected} (interval [{interval[0]:.6g}, {interval[1]:.6g}])"
        )
        self.interval = interval
        self.found = found
        self.expected = expected
