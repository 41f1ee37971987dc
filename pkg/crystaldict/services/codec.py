"""JSON documents and canonical labels <-> model objects."""
from __future__ import annotations

import json
import re
from typing import Any, Dict, List, Optional, Tuple, Type, TypeVar, Union

from pydantic import BaseModel, ConfigDict, Field, StrictInt, StrictStr, TypeAdapter, ValidationError

from crystaldict.errors import MalformedInput
from crystaldict.models.partitions import ColoredPartition, Multipartition, Partition
from crystaldict.models.segments import (
    EMPTY_LABEL,
    ContentMultiset,
    Multisegment,
    Segment,
    Weight,
    content_multiset,
)
from crystaldict.services.characters import CharWord, Character, character_rows

NULL_DOCUMENT = {"null": True}

_SEGMENT_LABEL = re.compile(r"\[(-?\d+),(-?\d+)\]")
_PARTITION_LABEL = re.compile(r"\(((?:\d+(?:,\d+)*)?)\|(-?\d+)\)")

M = TypeVar("M", bound=BaseModel)


class SegmentsDocument(BaseModel):
    segments: List[Tuple[StrictInt, StrictInt]]


class WeightDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    lam: List[StrictInt] = Field(alias="lambda")


class ColoredPartitionDocument(BaseModel):
    color: StrictInt
    parts: List[StrictInt]


class MultipartitionDocument(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    components: List[ColoredPartitionDocument]
    lam: Optional[List[StrictInt]] = Field(default=None, alias="lambda")


class NodeDocument(BaseModel):
    label: StrictStr
    n: StrictInt


class EdgeDocument(BaseModel):
    src: StrictInt
    dst: StrictInt
    i: StrictInt


class GraphDocument(BaseModel):
    nodes: List[NodeDocument]
    edges: List[EdgeDocument]


_WORD = TypeAdapter(List[StrictInt])


def _describe(exc: ValidationError) -> str:
    first = exc.errors()[0]
    where = ".".join(str(part) for part in first["loc"]) or "document"
    return f"{where}: {first['msg']}"


def validate(model: Type[M], obj: Any, what: str) -> M:
    try:
        return model.model_validate(obj)
    except ValidationError as exc:
        raise MalformedInput(f"bad {what} ({_describe(exc)})") from None


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON: {exc.msg} at line {exc.lineno} column {exc.colno}") from None


def dumps(document: Any) -> str:
    return json.dumps(document, ensure_ascii=False) + "\n"


def segment_list_from_json(obj: Any) -> List[Segment]:
    """Ordered segments from {"segments": [[i, j], ...]} or a bare list of pairs."""
    document = validate(SegmentsDocument, {"segments": obj} if isinstance(obj, list) else obj, "segment list")
    return [Segment(start, end) for start, end in document.segments]


def multisegment_from_json(obj: Any) -> Multisegment:
    return Multisegment(tuple(segment_list_from_json(obj)))


def multisegment_to_json(d: Optional[Multisegment]) -> Dict[str, Any]:
    if d is None:
        return dict(NULL_DOCUMENT)
    return {"segments": d.to_pairs()}


def weight_from_json(obj: Any) -> Weight:
    """Accepts [i_1, i_2, ...] or {"lambda": [...]}; colors with multiplicity, any order."""
    document = validate(WeightDocument, {"lambda": obj} if isinstance(obj, list) else obj, "weight")
    return Weight.from_colors(document.lam)


def weight_to_json(lam: Weight) -> Dict[str, Any]:
    return WeightDocument(lam=list(lam.components)).model_dump(by_alias=True)


def _colored_partition(document: ColoredPartitionDocument) -> ColoredPartition:
    return ColoredPartition(Partition(tuple(document.parts)), document.color)


def colored_partition_from_json(obj: Any) -> ColoredPartition:
    return _colored_partition(validate(ColoredPartitionDocument, obj, "colored partition"))


def colored_partition_to_json(cp: ColoredPartition) -> Dict[str, Any]:
    return ColoredPartitionDocument(color=cp.color, parts=list(cp.shape.parts)).model_dump()


def multipartition_from_json(obj: Any) -> Multipartition:
    document = validate(MultipartitionDocument, obj, "multipartition")
    mp = Multipartition(tuple(_colored_partition(c) for c in document.components))
    if document.lam is not None:
        declared = Weight.from_colors(document.lam)
        if declared != mp.lam:
            raise MalformedInput(f"lambda {declared.label} does not match component colors {mp.lam.label}")
    return mp


def multipartition_to_json(mp: Optional[Multipartition]) -> Dict[str, Any]:
    if mp is None:
        return dict(NULL_DOCUMENT)
    return {"components": [colored_partition_to_json(c) for c in mp.components]}


def char_word_from_json(obj: Any) -> CharWord:
    try:
        return tuple(_WORD.validate_python(obj))
    except ValidationError as exc:
        raise MalformedInput(f"bad word ({_describe(exc)})") from None


def character_to_json(c: Character) -> Dict[str, Any]:
    return {"length": c.length, "terms": character_rows(c)}


def parse_multisegment_label(label: str) -> Multisegment:
    if label == EMPTY_LABEL:
        return Multisegment()
    pieces = label.split("+")
    segments = []
    for piece in pieces:
        match = _SEGMENT_LABEL.fullmatch(piece)
        if match is None:
            raise MalformedInput(f"bad segment {piece!r} in label {label!r}")
        segments.append(Segment(int(match.group(1)), int(match.group(2))))
    return Multisegment(tuple(segments))


def parse_multipartition_label(label: str) -> Multipartition:
    components = []
    position = 0
    for match in _PARTITION_LABEL.finditer(label):
        if match.start() != position:
            break
        parts = tuple(int(p) for p in match.group(1).split(",")) if match.group(1) else ()
        components.append(ColoredPartition(Partition(parts), int(match.group(2))))
        position = match.end()
    if position != len(label) or not components:
        raise MalformedInput(f"bad multipartition label {label!r}")
    return Multipartition(tuple(components))


LabelObject = Union[Multisegment, Multipartition, List[Multipartition]]


def parse_label(label: str) -> LabelObject:
    """Multisegment, multipartition, or the factor list of a tensor label."""
    if label == "":
        return Multipartition()
    if label == EMPTY_LABEL or label.startswith("["):
        return parse_multisegment_label(label)
    if "*" in label:
        return [parse_multipartition_label(part) for part in label.split("*")]
    if label.startswith("("):
        return parse_multipartition_label(label)
    raise MalformedInput(f"unrecognized node label {label!r}")


def weight_of_label(label: str) -> ContentMultiset:
    parsed = parse_label(label)
    if isinstance(parsed, Multisegment):
        return content_multiset(parsed)
    if isinstance(parsed, Multipartition):
        return parsed.weight()
    total = ContentMultiset()
    for factor in parsed:
        total = total + factor.weight()
    return total


def size_of_label(label: str) -> int:
    return weight_of_label(label).total
