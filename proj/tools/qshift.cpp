#include <iostream>

int main() {
  std::cout << "qshift\n";
  return 0;
}
