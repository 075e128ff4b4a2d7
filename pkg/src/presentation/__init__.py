"""
Presentation Layer

사용자 인터페이스를 담당합니다.
- cli: click 명령줄 인터페이스
"""
