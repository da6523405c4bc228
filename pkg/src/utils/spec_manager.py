"""
实验描述文件管理 - 解析、校验与规范化输出 JSON 实验描述
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, Field, ValidationError as PydanticValidationError, field_validator, model_validator

from .error_handler import FileIOError, ValidationError
from .pomset import ANTICHAIN, CHAIN, DIRECT, ORDINAL

logger = logging.getLogger(__name__)

RELATION = "relation"
LEAF_KINDS = (CHAIN, ANTICHAIN, RELATION)
COMPOSITE_KINDS = (DIRECT, ORDINAL)
METHODS = ("auto", "theorem", "corollary", "sum", "fourier")


class PomsetSpec(BaseModel):
    """pomset 描述：链/反链/显式关系对，或由 parts 组成的直和/序数和"""
    kind: str
    points: Optional[int] = None
    pairs: Optional[List[Tuple[int, int]]] = None
    parts: Optional[List["PomsetSpec"]] = None

    @field_validator('kind')
    @classmethod
    def validate_kind(cls, v):
        if v not in LEAF_KINDS + COMPOSITE_KINDS:
            raise ValueError(f'pomset 类型必须是 {", ".join(LEAF_KINDS + COMPOSITE_KINDS)} 之一')
        return v

    @field_validator('points')
    @classmethod
    def validate_points(cls, v):
        if v is not None and v < 1:
            raise ValueError('基点数必须为正')
        return v

    @model_validator(mode='after')
    def validate_shape(self):
        if self.kind in COMPOSITE_KINDS:
            if not self.parts or len(self.parts) < 2:
                raise ValueError(f'{self.kind} 组合至少需要 2 个 parts')
            if self.pairs is not None:
                raise ValueError('组合 pomset 不接受 pairs')
        else:
            if self.parts is not None:
                raise ValueError(f'{self.kind} 不接受 parts')
            if self.kind == RELATION and self.pairs is None:
                raise ValueError('relation 类型需要 pairs')
            if self.kind != RELATION and self.pairs is not None:
                raise ValueError(f'{self.kind} 不接受 pairs')
        return self

    def point_count(self, default: Optional[int] = None) -> int:
        """基点总数；顶层叶子可缺省为块数，组合内部的叶子必须显式给出"""
        if self.kind in COMPOSITE_KINDS:
            return sum(part.point_count() for part in self.parts)
        if self.points is not None:
            return self.points
        if default is None:
            raise ValueError(f'组合内部的 {self.kind} 分量必须给出 points')
        return default


PomsetSpec.model_rebuild()


class SpecOptions(BaseModel):
    """命令选项，命令行参数优先"""
    method: str = "auto"
    trials: Optional[int] = None
    seed: Optional[int] = None
    budget: Optional[int] = None
    exhaustive: bool = False

    @field_validator('method')
    @classmethod
    def validate_method(cls, v):
        if v not in METHODS:
            raise ValueError(f'method 必须是 {", ".join(METHODS)} 之一')
        return v

    @field_validator('trials')
    @classmethod
    def validate_trials(cls, v):
        if v is not None and v < 0:
            raise ValueError('探测次数不能为负数')
        return v

    @field_validator('budget')
    @classmethod
    def validate_budget(cls, v):
        if v is not None and v <= 0:
            raise ValueError('穷举预算必须大于0')
        return v


class ExperimentSpec(BaseModel):
    """一次实验：模数、块结构、pomset、码（生成元或显式码字）与选项"""
    m: int
    blocks: List[int]
    pomset: PomsetSpec
    generators: Optional[List[List[int]]] = None
    words: Optional[List[List[int]]] = None
    options: SpecOptions = Field(default_factory=SpecOptions)

    @field_validator('m')
    @classmethod
    def validate_m(cls, v):
        if v < 2:
            raise ValueError('模数 m 必须 ≥ 2')
        return v

    @field_validator('blocks')
    @classmethod
    def validate_blocks(cls, v):
        if not v:
            raise ValueError('blocks 不能为空')
        if any(d < 1 for d in v):
            raise ValueError('块维数必须为正')
        return v

    @model_validator(mode='after')
    def validate_consistency(self):
        if (self.generators is None) == (self.words is None):
            raise ValueError('必须且只能给出 generators 或 words 之一')
        n = sum(self.blocks)
        for row in self.rows:
            if len(row) != n:
                raise ValueError(f'向量 {row} 的长度与 Σblocks = {n} 不一致')
        points = self.pomset.point_count(default=len(self.blocks))
        if points != len(self.blocks):
            raise ValueError(f'pomset 基点数 {points} 与块数 {len(self.blocks)} 不一致')
        return self

    @property
    def rows(self) -> List[List[int]]:
        return self.generators if self.generators is not None else self.words

    @property
    def n(self) -> int:
        return sum(self.blocks)


def parse_spec(data: Union[str, Dict[str, Any]]) -> ExperimentSpec:
    """由 JSON 文本或字典构造 ExperimentSpec，所有格式错误统一为 ValidationError"""
    try:
        if isinstance(data, str):
            data = json.loads(data)
        if not isinstance(data, dict):
            raise ValidationError("实验描述的顶层必须是 JSON 对象", field="spec")
        return ExperimentSpec(**data)
    except json.JSONDecodeError as e:
        raise ValidationError(f"实验描述不是合法的 JSON: {e}", field="spec") from e
    except PydanticValidationError as e:
        messages = "; ".join(f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in e.errors())
        raise ValidationError(f"实验描述校验失败: {messages}", field="spec") from e


def load_spec(spec_file: Union[str, Path]) -> ExperimentSpec:
    path = Path(spec_file)
    if not path.exists():
        raise FileIOError(f"实验描述文件不存在: {path}", file_path=str(path))
    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise FileIOError(f"读取实验描述文件失败: {e}", file_path=str(path)) from e
    spec = parse_spec(text)
    logger.info(f"已加载实验描述: {path.name} (m={spec.m}, blocks={spec.blocks}, pomset={spec.pomset.kind})")
    return spec


def dump_spec(spec: ExperimentSpec) -> str:
    """规范化输出：键排序、省略空值，可被 parse_spec 原样读回"""
    return json.dumps(spec.model_dump(exclude_none=True), ensure_ascii=False, indent=2, sort_keys=True)
