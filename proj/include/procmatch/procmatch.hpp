#pragma once

// Umbrella header: plain-text process descriptions in, workflow Petri nets
// and reference-model match rankings out.

#include "procmatch/embeddings.hpp"
#include "procmatch/errors.hpp"
#include "procmatch/lexicon.hpp"
#include "procmatch/matcher.hpp"
#include "procmatch/model_io.hpp"
#include "procmatch/nlp.hpp"
#include "procmatch/petri.hpp"
#include "procmatch/translate.hpp"
