#include <cstdio>

int main() {
    std::puts("uqc: no command given (work in progress)");
    return 2;
}
