"""값 객체와 보고서를 위한 기본 모델."""

import dataclasses
import json
from typing import Any, Dict, Type, TypeVar


T = TypeVar("T", bound="BaseModel")


class BaseModel:
    """모든 pythresh 데이터 모델의 기본 클래스."""

    @classmethod
    def _normalize_key(cls, name: str) -> str:
        """CLI/CSV 형식의 키(kebab-case)를 필드 이름으로 변환합니다."""
        return name.strip().replace("-", "_").lower()

    @classmethod
    def from_dict(cls: Type[T], data: Dict[str, Any]) -> T:
        """딕셔너리에서 모델 인스턴스를 생성합니다.

        알 수 없는 키는 무시합니다.
        """
        if not dataclasses.is_dataclass(cls):
            raise TypeError(f"{cls.__name__} must be a dataclass")

        fields = {f.name for f in dataclasses.fields(cls) if f.init}
        kwargs = {}
        for key, value in data.items():
            name = cls._normalize_key(key)
            if name in fields:
                kwargs[name] = value

        return cls(**kwargs)

    def to_dict(self) -> Dict[str, Any]:
        """모델 인스턴스를 딕셔너리로 변환합니다."""
        return dataclasses.asdict(self)

    def to_json(self, **kwargs) -> str:
        """to_dict 결과를 JSON 문자열로 직렬화합니다."""
        kwargs.setdefault("sort_keys", False)
        return json.dumps(self.to_dict(), **kwargs)
