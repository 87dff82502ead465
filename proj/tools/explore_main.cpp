#include <cstdio>

int main() {
    std::puts("explore: CLI not wired up yet");
    return 1;
}
