#include "betawalk/parallel.hpp"

#include <cstdlib>
#include <string>

namespace betawalk {

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("BETAWALK_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v > 0) return v;
        } catch (...) {
        }
    }
    return 1;
}

}  // namespace betawalk
