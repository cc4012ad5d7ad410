#pragma once

#include "tecvis/aggregate.hpp"
#include "tecvis/compare.hpp"
#include "tecvis/corpus.hpp"
#include "tecvis/emotion.hpp"
#include "tecvis/emotions.hpp"
#include "tecvis/error.hpp"
#include "tecvis/pipeline.hpp"
#include "tecvis/query.hpp"
#include "tecvis/sentiment.hpp"
#include "tecvis/serialize.hpp"
#include "tecvis/synth.hpp"
#include "tecvis/textprep.hpp"
#include "tecvis/timeutil.hpp"
