#include <cstdio>
int main() { std::puts("generate"); return 0; }
