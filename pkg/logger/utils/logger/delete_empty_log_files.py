import os


# os.walk yields (current_path, directories in current_path, files in current_path)
# and follows each sub-directory recursively.
def delete_empty_log_files(root_folder: str) -> None:
    """
    Auto-clean the debug folder of empty .log files left behind by loggers that never wrote.
    """
    if not os.path.isdir(root_folder):
        return
    for root, _, filenames in os.walk(root_folder):
        for filename in filenames:
            if not filename.endswith('.log'):
                continue
            file_path = os.path.join(root, filename)
            try:
                if os.path.getsize(file_path) == 0: # 0kb
                    os.remove(file_path)
            except OSError:
                # Another process may hold or have removed it.
                pass
