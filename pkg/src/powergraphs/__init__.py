"""Power graphs of finite groups and their connectivity."""
