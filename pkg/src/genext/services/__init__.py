"""Services package: rank engine, closed forms and incidence matrices."""
