from .hypergraph_schema import HypergraphSchema
from .chain_config_schema import ChainConfigSchema
from .ingest_config_schema import IngestConfigSchema
from .synth_spec_schema import SynthSpecSchema
from .null_test_report_schema import NullTestReportSchema, ProvenanceSchema
from .run_manifest_schema import RunManifestSchema, SampleManifestSchema
from .profile_report_schema import ProfileNullReportSchema
from .exact_report_schema import ExactReportSchema
