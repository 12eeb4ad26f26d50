package org.eclipse.search.internal.core;

/**
 * Runs text and java searches over the workspace.
 */
public class SearchEngine {
    private IndexManager indexManager;

    public SearchResult search(SearchPattern pattern, IProgressMonitor monitor) {
        SearchResult result = new SearchResult(pattern);
        for (String path : indexManager.candidatePaths(pattern)) {
            result.addAll(searchFile(path, pattern));
        }
        return result;
    }

    private List<Match> searchFile(String path, SearchPattern pattern) {
        return pattern.matchAll(indexManager.contents(path));
    }

    public void cancel() {
        indexManager.stopJobs();
    }
}
