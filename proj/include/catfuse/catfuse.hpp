#ifndef CATFUSE_CATFUSE_HPP
#define CATFUSE_CATFUSE_HPP

#include "catfuse/rational.hpp"
#include "catfuse/error.hpp"
#include "catfuse/fvect.hpp"
#include "catfuse/asc.hpp"
#include "catfuse/typesys.hpp"
#include "catfuse/measure.hpp"
#include "catfuse/typed.hpp"
#include "catfuse/laws.hpp"
#include "catfuse/hierarchy.hpp"
#include "catfuse/vectorize.hpp"
#include "catfuse/sheaf.hpp"
#include "catfuse/pipeline.hpp"
#include "catfuse/io.hpp"
#include "catfuse/catalog.hpp"
#include "catfuse/cli.hpp"

#endif  // CATFUSE_CATFUSE_HPP
