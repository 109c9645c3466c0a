#include <cstdio>
int main() { std::puts("stsynth: not wired yet"); return 0; }
