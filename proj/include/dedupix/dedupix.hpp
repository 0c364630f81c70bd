#pragma once

#include "dedupix/bench.hpp"
#include "dedupix/clustering.hpp"
#include "dedupix/config.hpp"
#include "dedupix/corpus.hpp"
#include "dedupix/error.hpp"
#include "dedupix/identity.hpp"
#include "dedupix/image.hpp"
#include "dedupix/merkle.hpp"
#include "dedupix/mlp.hpp"
#include "dedupix/netio.hpp"
#include "dedupix/preprocess.hpp"
#include "dedupix/protocol.hpp"
#include "dedupix/quadtree.hpp"
#include "dedupix/rng.hpp"
#include "dedupix/store.hpp"
#include "dedupix/tiger.hpp"
#include "dedupix/transfer.hpp"
