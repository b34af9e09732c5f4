#include <cstdio>

int main() {
  std::printf("nestkg: CLI under construction\n");
  return 1;
}
