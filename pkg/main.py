"""
Sampling / Multiplier Lab - Entry Point

Layered Architecture 기반 수치 실험 Lab

Layers:
- Presentation: 명령줄 인터페이스 (click)
- Application: 설정 검증 + 명령 유스케이스 (DI Container)
- Evaluation: 해상도 스캔 / 항등식 검증 러너
- Domain: 기하, 스펙트럼, 샘플링, multiplier 계산
- Infrastructure: 결과 파일 기록, 병렬 실행
- Core: 공통 설정, 로깅, 프로파일

Usage:
    python main.py tiling --set "cube(0,0;2pi)" --M 16,32
    lab fefferman --set "ball(0,0;pi)" --p 4 --M 16,32,64
"""
from dotenv import load_dotenv

from src.presentation.cli import cli


if __name__ == "__main__":
    load_dotenv()
    cli()
