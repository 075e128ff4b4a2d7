"""
Domain Layer

수치 실험의 도메인 로직을 담당합니다.
- entities: 집합, 격자, 이산 모델, 결과 스키마
- geometry: 집합 표현식, rasterize, 타일링 판정
- spectral: Fourier 변환, 노름, 무작위 field
- optimization: nonlinear power method
- sampling: 샘플링 / 보간 상수, 재구성, witness, Shannon 기준선
- multiplier: multiplier norm, 동치 실험, 해상도 스캔
"""
