int main() { return 1; } // pending
