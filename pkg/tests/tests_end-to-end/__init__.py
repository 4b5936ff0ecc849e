"""Backend test suite package for SecureModelHub.

Contains unit and integration tests for Lambda functions, API endpoints, and utility modules.
"""