//! File formats, exports and batch runs on top of [`pentile_core`].

pub mod atlas;
pub mod config;
pub mod doc;
pub mod export;
pub mod fixture;

use pentile_core::avc::AvcError;
use pentile_core::pentagon::PentagonError;
use pentile_core::realize::RealizeError;
use pentile_core::tiling::TilingError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Pentagon(#[from] PentagonError),
    #[error(transparent)]
    Tiling(#[from] TilingError),
    #[error(transparent)]
    Avc(#[from] AvcError),
    #[error(transparent)]
    Realize(#[from] RealizeError),
    #[error(transparent)]
    Export(#[from] export::ExportError),
    #[error(transparent)]
    Fixture(#[from] fixture::FixtureError),
    #[error(transparent)]
    Doc(#[from] doc::DocError),
    #[error(transparent)]
    Config(#[from] config::ConfigError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
