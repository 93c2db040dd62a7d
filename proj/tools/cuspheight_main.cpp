#include <cstdio>
int main() { std::puts("cuspheight: subcommands pending"); return 0; }
