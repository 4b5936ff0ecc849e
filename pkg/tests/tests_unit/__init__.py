"""Backend test suite package for SecureModelHub.

Contains unit tests for Lambda functions, API endpoints, and utility modules.
"""