#pragma once

#include <cstdlib>
#include <filesystem>

#include "looplab/cpl.hpp"

// Groundstates up to size 12 shared by all test cases; the on-disk copy
// survives between runs so only the first run pays for the solves.
inline looplab::GroundStateCache& shared_cache() {
    static looplab::GroundStateCache cache(
        looplab::GroundStateCache::resolve_dir(std::filesystem::temp_directory_path() / "looplab-test-cache"), 12);
    return cache;
}
