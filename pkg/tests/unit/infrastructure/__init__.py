# Infrastructure Layer Unit Tests
