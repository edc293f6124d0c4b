#include <cstdio>

int main() {
    std::puts("orthofit: subcommands not wired up yet");
    return 2;
}
