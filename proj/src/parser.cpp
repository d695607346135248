// placeholder -- implementation pending
