# Reading and writing the JSON interchange files
import json
from pathlib import Path
from typing import Union

from pydantic import BaseModel, ValidationError

from app.core.errors import InstanceValidationError
from app.core.instance import validate_instance
from app.models import Instance, Solution
from app.schemas import BinPackingFile, InstanceFile, SolutionFile, to_json

PathLike = Union[str, Path]


def read_instance(path: PathLike) -> Instance:
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise InstanceValidationError([f"{path}: not valid JSON ({exc.msg})"]) from exc
    return validate_instance(raw)


def read_solution(path: PathLike) -> Solution:
    return SolutionFile.model_validate_json(Path(path).read_text()).to_solution()


def read_bin_packing(path: PathLike) -> BinPackingFile:
    try:
        return BinPackingFile.model_validate_json(Path(path).read_text())
    except ValidationError as exc:
        raise InstanceValidationError(
            f"{'.'.join(str(p) for p in err['loc'])}: {err['msg']}" for err in exc.errors()
        ) from exc


def write_model(path: PathLike, model: BaseModel) -> None:
    write_text(path, to_json(model))


def write_text(path: PathLike, text: str) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8")


def dump_instance(inst: Instance) -> str:
    return to_json(InstanceFile.from_instance(inst))


def dump_solution(sol: Solution) -> str:
    return to_json(SolutionFile.from_solution(sol))
