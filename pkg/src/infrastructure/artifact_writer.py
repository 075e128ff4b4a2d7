"""
Artifact Writer

Infrastructure Layer: 실험 결과 파일 기록

CSV:
    # version: 1.0.0
    # config: {"command": ..., ...}
    # timestamp: 2026-01-01T00:00:00+00:00
    col1,col2,...
    ...
    # complete: rows=N

JSON:
    {"version": ..., "config": {...}, "timestamp": ..., "result": {...}, "complete": true}

Field snapshot (스펙트럼 F, 평탄화 C-order index):
    CSV    : "# model: {json}" 다음 index,re,im 행
    binary : JSON header 한 줄 + little-endian complex128 바이트
"""
import csv
import json
from datetime import datetime, timezone
from pathlib import Path
from typing import Any, Dict, Iterable, List, Sequence, Union

import numpy as np
from pydantic import BaseModel

from src.core import Settings
from src.core.exceptions import ConfigError
from src.core.logging import get_logger
from src.domain.entities.field import BandlimitedField, TorusModel
from src.domain.entities.grid import GridSpec

logger = get_logger(__name__)

ARTIFACT_VERSION = "1.0.0"
BINARY_DTYPE = "<c16"

Record = Union[BaseModel, Dict[str, Any]]


def _as_dict(record: Record) -> Dict[str, Any]:
    return record.model_dump(mode="json") if isinstance(record, BaseModel) else dict(record)


def _timestamp() -> str:
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _config_json(config: Dict[str, Any]) -> str:
    return json.dumps(config, sort_keys=True, ensure_ascii=False, default=str)


class ArtifactWriter:
    """결과 파일 기록기

    모든 파일에 버전과 해석된 전체 설정을 포함합니다.
    """

    def __init__(self, settings: Settings = None, output_dir: Union[str, Path, None] = None):
        self.settings = settings or Settings()
        self.output_dir = Path(output_dir or self.settings.output.output_dir)

    def resolve(self, name: Union[str, Path]) -> Path:
        """상대 경로는 output_dir 아래로"""
        path = Path(name)
        if not path.is_absolute():
            path = self.output_dir / path
        path.parent.mkdir(parents=True, exist_ok=True)
        return path

    # ============ CSV / JSON ============

    def write_csv(
        self,
        name: Union[str, Path],
        rows: Iterable[Record],
        columns: Sequence[str],
        config: Dict[str, Any],
    ) -> Path:
        """헤더(버전, 설정, 시각) + 행 + 완료 footer"""
        path = self.resolve(name)
        records = [_as_dict(r) for r in rows]
        with path.open("w", newline="", encoding="utf-8") as handle:
            handle.write(f"# version: {ARTIFACT_VERSION}\n")
            handle.write(f"# config: {_config_json(config)}\n")
            handle.write(f"# timestamp: {_timestamp()}\n")
            writer = csv.DictWriter(handle, fieldnames=list(columns), extrasaction="ignore")
            writer.writeheader()
            for record in records:
                writer.writerow(record)
            handle.write(f"# complete: rows={len(records)}\n")
        logger.info("[Artifact] CSV %s (%d rows)", path, len(records))
        return path

    def write_json(self, name: Union[str, Path], result: Union[Record, List[Record]], config: Dict[str, Any]) -> Path:
        path = self.resolve(name)
        if isinstance(result, list):
            payload_result: Any = [_as_dict(r) for r in result]
        else:
            payload_result = _as_dict(result)
        payload = {
            "version": ARTIFACT_VERSION,
            "config": json.loads(_config_json(config)),
            "timestamp": _timestamp(),
            "result": payload_result,
            "complete": True,
        }
        path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")
        logger.info("[Artifact] JSON %s", path)
        return path

    # ============ Field snapshots ============

    def write_field_csv(self, name: Union[str, Path], field: BandlimitedField) -> Path:
        path = self.resolve(name)
        flat = field.spectrum.ravel()
        with path.open("w", newline="", encoding="utf-8") as handle:
            handle.write(f"# model: {json.dumps(field.model.describe(), sort_keys=True)}\n")
            writer = csv.writer(handle)
            writer.writerow(["index", "re", "im"])
            for index, value in enumerate(flat):
                writer.writerow([index, repr(float(value.real)), repr(float(value.imag))])
        return path

    def write_field_binary(self, name: Union[str, Path], field: BandlimitedField) -> Path:
        path = self.resolve(name)
        header = json.dumps({**field.model.describe(), "dtype": BINARY_DTYPE}, sort_keys=True)
        with path.open("wb") as handle:
            handle.write(header.encode("utf-8") + b"\n")
            handle.write(field.spectrum.astype(BINARY_DTYPE).tobytes())
        return path


# ============ Readers ============

def read_embedded_config(path: Union[str, Path]) -> Dict[str, Any]:
    """CSV 헤더 또는 JSON 파일에 포함된 설정"""
    path = Path(path)
    if path.suffix == ".json":
        return json.loads(path.read_text(encoding="utf-8"))["config"]
    with path.open(encoding="utf-8") as handle:
        for line in handle:
            if line.startswith("# config: "):
                return json.loads(line[len("# config: "):])
            if not line.startswith("#"):
                break
    raise ConfigError(f"{path}: '# config:' 헤더가 없습니다")


def _model_from_header(header: Dict[str, Any]) -> TorusModel:
    grid = GridSpec(header["M"], tuple(header["cell_lo"]), tuple(header["cell_hi"]))
    return TorusModel(grid, header["s"])


def read_field_csv(path: Union[str, Path]) -> BandlimitedField:
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        first = handle.readline()
        if not first.startswith("# model: "):
            raise ConfigError(f"{path}: '# model:' 헤더가 없습니다")
        model = _model_from_header(json.loads(first[len("# model: "):]))
        reader = csv.DictReader(handle)
        flat = np.zeros(int(np.prod(model.spectral_shape)), dtype=complex)
        for row in reader:
            flat[int(row["index"])] = complex(float(row["re"]), float(row["im"]))
    return BandlimitedField(model, flat.reshape(model.spectral_shape))


def read_field_binary(path: Union[str, Path]) -> BandlimitedField:
    raw = Path(path).read_bytes()
    newline = raw.index(b"\n")
    header = json.loads(raw[:newline].decode("utf-8"))
    model = _model_from_header(header)
    values = np.frombuffer(raw[newline + 1:], dtype=header.get("dtype", BINARY_DTYPE))
    if values.size != int(np.prod(model.spectral_shape)):
        raise ConfigError(f"{path}: 데이터 길이 {values.size} 가 모델 크기와 다릅니다")
    return BandlimitedField(model, values.reshape(model.spectral_shape).astype(complex))
