# Domain Layer Unit Tests
