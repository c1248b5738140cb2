"""Complete k-partite graphs and their closed-form invariants."""
